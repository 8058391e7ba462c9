#include "glpair/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

namespace glpair {

int Coloring::count(Color c) const {
  return static_cast<int>(std::count(face_color.begin(), face_color.end(), c));
}

Coloring Coloring::swapped() const {
  Coloring s = *this;
  for (auto& c : s.face_color) c = opposite(c);
  return s;
}

bool is_valid_coloring(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c) {
  if (static_cast<int>(c.face_color.size()) != faces.count()) return false;
  for (Dart e = 0; e < d.dart_count(); ++e)
    if (c.of_face(faces.face_of_dart[e]) == c.of_face(faces.face_of_dart[d.partner(e)])) return false;
  return true;
}

std::vector<Coloring> checkerboard_colorings(const SurfaceDiagram& d, const FaceStructure& faces) {
  const int nf = faces.count();
  // The two sides of the edge through dart e are face_of_dart[e] and
  // face_of_dart[partner(e)].
  std::vector<std::vector<int>> adj(nf);
  for (Dart e = 0; e < d.dart_count(); ++e) {
    const int f = faces.face_of_dart[e];
    const int g = faces.face_of_dart[d.partner(e)];
    if (f == g) return {};
    adj[f].push_back(g);
  }

  std::vector<int> color(nf, -1);
  std::vector<int> roots;
  std::vector<int> root_of(nf, -1);
  for (int s = 0; s < nf; ++s) {
    if (color[s] != -1) continue;
    roots.push_back(s);
    color[s] = 1;
    root_of[s] = static_cast<int>(roots.size()) - 1;
    std::queue<int> todo;
    todo.push(s);
    while (!todo.empty()) {
      const int f = todo.front();
      todo.pop();
      for (int g : adj[f]) {
        if (color[g] == -1) {
          color[g] = 1 - color[f];
          root_of[g] = root_of[s];
          todo.push(g);
        } else if (color[g] == color[f]) {
          return {};
        }
      }
    }
  }

  const std::size_t k = roots.size();
  std::vector<Coloring> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Coloring c;
    c.face_color.resize(nf);
    for (int f = 0; f < nf; ++f) {
      const bool flip = (mask >> root_of[f]) & 1;
      c.face_color[f] = ((color[f] == 1) != flip) ? Color::black : Color::white;
    }
    out.push_back(std::move(c));
  }
  return out;
}

HomologyObstruction homology_obstruction(const SurfaceDiagram& d, const FaceStructure& faces) {
  const int nf = faces.count();
  const std::size_t words = static_cast<std::size_t>(nf) / 64 + 1;
  const std::size_t rhs_bit = static_cast<std::size_t>(nf);
  // One equation per edge: the coefficient of edge e in d2 x is the sum of
  // x over the faces on its two sides (zero when both sides agree).
  std::vector<std::vector<std::uint64_t>> rows;
  auto flip = [](std::vector<std::uint64_t>& r, std::size_t bit) { r[bit / 64] ^= std::uint64_t{1} << (bit % 64); };
  auto test = [](const std::vector<std::uint64_t>& r, std::size_t bit) { return (r[bit / 64] >> (bit % 64)) & 1; };
  for (const auto& [a, b] : d.edges()) {
    std::vector<std::uint64_t> r(words, 0);
    flip(r, faces.face_of_dart[a]);
    flip(r, faces.face_of_dart[b]);
    flip(r, rhs_bit);
    rows.push_back(std::move(r));
  }

  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < nf && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !test(rows[p], col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && test(rows[r], col))
        for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
    pivot_col.push_back(col);
    ++rank;
  }

  HomologyObstruction out;
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (test(rows[r], rhs_bit)) return out;
  out.solvable = true;
  out.faces.assign(nf, false);
  for (std::size_t r = 0; r < rank; ++r) out.faces[pivot_col[r]] = test(rows[r], rhs_bit);
  return out;
}

Color even_quadrant_color(const FaceStructure& faces, const Coloring& c, int crossing) {
  return c.of_face(faces.quadrant_face(crossing, 0));
}

bool even_quadrants_pure(const LinkOrientation& o, int crossing) {
  // Quadrant 0 lies between slots 0 and 1.
  return o.is_outgoing(4 * crossing + 0) == o.is_outgoing(4 * crossing + 1);
}

std::vector<CrossingClass> classify_crossings(const SurfaceDiagram& d, const FaceStructure& faces,
                                              const Coloring& c, const LinkOrientation& o) {
  std::vector<CrossingClass> out(d.crossing_count());
  for (int x = 0; x < d.crossing_count(); ++x) {
    const bool black_even = even_quadrant_color(faces, c, x) == Color::black;
    const bool black_pure = black_even == even_quadrants_pure(o, x);
    auto& cls = out[x];
    cls.color_type = black_even ? ColorType::b : ColorType::a;
    cls.incidence = black_even ? -1 : 1;
    cls.orientation_type = black_pure ? OrientationType::II : OrientationType::I;
  }
  return out;
}

TypeCounts count_types(const std::vector<CrossingClass>& classes) {
  TypeCounts t;
  for (const auto& c : classes) (c.color_type == ColorType::a ? t.a : t.b) += 1;
  return t;
}

}  // namespace glpair
