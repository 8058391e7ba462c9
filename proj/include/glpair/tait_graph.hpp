#ifndef GLPAIR_TAIT_GRAPH_HPP
#define GLPAIR_TAIT_GRAPH_HPP

#include "glpair/coloring.hpp"
#include "glpair/diagram.hpp"

#include <vector>

namespace glpair {

struct TaitEdge {
  int crossing = 0;
  int tail = 0;   // vertex at quadrant 0 (or 1)
  int head = 0;   // vertex at quadrant 2 (or 3)
  int label = 0;  // +1 / -1
};

/// One vertex per face of the chosen color, one signed edge per crossing.
/// Black edges carry the incidence number of their crossing, white edges its
/// negative.
struct TaitGraph {
  Color color = Color::black;
  std::vector<int> vertex_face;  // face index of each vertex
  std::vector<TaitEdge> edges;   // indexed by crossing

  int vertex_count() const { return static_cast<int>(vertex_face.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int component_count() const;
  /// First Betti number: edges - vertices + components.
  int cycle_rank() const { return edge_count() - vertex_count() + component_count(); }
};

TaitGraph tait_graph(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c, Color color);

}  // namespace glpair

#endif  // GLPAIR_TAIT_GRAPH_HPP
