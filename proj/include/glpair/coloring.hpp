#ifndef GLPAIR_COLORING_HPP
#define GLPAIR_COLORING_HPP

#include "glpair/diagram.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace glpair {

enum class Color : std::uint8_t { white, black };

constexpr Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }
constexpr std::string_view to_string(Color c) { return c == Color::black ? "black" : "white"; }

struct Coloring {
  std::vector<Color> face_color;  // canonical face order

  Color of_face(int f) const { return face_color[f]; }
  int count(Color c) const;
  /// Number of white faces.
  int alpha() const { return count(Color::white); }
  /// Number of black faces.
  int beta() const { return count(Color::black); }
  Coloring swapped() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// True when every edge separates a black face from a white one.
bool is_valid_coloring(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c);

/// All checkerboard colorings, found by parity propagation across edges.
/// Empty when the diagram is not colorable; otherwise 2^k colorings for a
/// diagram with k pieces (each piece can be swapped on its own). The first
/// coloring makes the first face of every piece black.
std::vector<Coloring> checkerboard_colorings(const SurfaceDiagram& d, const FaceStructure& faces);

struct HomologyObstruction {
  /// True when the sum of all edges is a mod-2 boundary of some face set.
  bool solvable = false;
  /// A solving face set (true = in the set) when solvable.
  std::vector<bool> faces;
};

/// Solves d2 x = (all edges) over GF(2) on the cell structure of the carrier
/// surface. Independent of checkerboard_colorings.
HomologyObstruction homology_obstruction(const SurfaceDiagram& d, const FaceStructure& faces);

enum class ColorType : std::uint8_t { a, b };
enum class OrientationType : std::uint8_t { I, II };

// Quadrant q at a crossing is the corner between slots q and q+1. A crossing
// is type b when its black quadrants are {0, 2} and type a otherwise.
// Given an orientation, a quadrant is "pure" when both of its bounding
// strands point into the crossing or both point out. A crossing is type II
// when its black quadrants are pure and type I when they are mixed.
struct CrossingClass {
  ColorType color_type = ColorType::a;
  OrientationType orientation_type = OrientationType::I;
  int incidence = 1;  // +1 for type a, -1 for type b
};

/// Color of the {0, 2} quadrant pair at a crossing.
Color even_quadrant_color(const FaceStructure& faces, const Coloring& c, int crossing);

/// True when quadrants {0, 2} are the pure pair at the crossing.
bool even_quadrants_pure(const LinkOrientation& o, int crossing);

std::vector<CrossingClass> classify_crossings(const SurfaceDiagram& d, const FaceStructure& faces,
                                              const Coloring& c, const LinkOrientation& o);

struct TypeCounts {
  int a = 0;
  int b = 0;
};
TypeCounts count_types(const std::vector<CrossingClass>& classes);

}  // namespace glpair

#endif  // GLPAIR_COLORING_HPP
