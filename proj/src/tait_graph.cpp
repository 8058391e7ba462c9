#include "glpair/tait_graph.hpp"

#include <numeric>

namespace glpair {

int TaitGraph::component_count() const {
  std::vector<int> parent(vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int comps = vertex_count();
  for (const auto& e : edges) {
    const int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

TaitGraph tait_graph(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c, Color color) {
  TaitGraph g;
  g.color = color;
  std::vector<int> vertex_of_face(faces.count(), -1);
  for (int f = 0; f < faces.count(); ++f)
    if (c.of_face(f) == color) {
      vertex_of_face[f] = g.vertex_count();
      g.vertex_face.push_back(f);
    }
  g.edges.reserve(d.crossing_count());
  for (int x = 0; x < d.crossing_count(); ++x) {
    const bool even = even_quadrant_color(faces, c, x) == color;
    const int q = even ? 0 : 1;
    const int incidence = even_quadrant_color(faces, c, x) == Color::black ? -1 : 1;
    TaitEdge e;
    e.crossing = x;
    e.tail = vertex_of_face[faces.quadrant_face(x, q)];
    e.head = vertex_of_face[faces.quadrant_face(x, q + 2)];
    e.label = color == Color::black ? incidence : -incidence;
    g.edges.push_back(e);
  }
  return g;
}

}  // namespace glpair
