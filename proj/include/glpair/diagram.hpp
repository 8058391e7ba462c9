#ifndef GLPAIR_DIAGRAM_HPP
#define GLPAIR_DIAGRAM_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glpair {

// A link diagram on a closed oriented surface, stored as a 4-valent
// combinatorial map. Crossing x owns four ports (slots) 0..3 in
// counterclockwise order seen from the positive side of the surface.
// Slots 1 and 3 carry the over-strand, slots 0 and 2 the under-strand, and a
// strand entering slot p leaves through slot (p + 2) mod 4.
//
// A dart is a port viewed as a half-edge leaving its crossing: dart 4x + p.
// The surface is implicit in the rotation system, so every diagram is
// cellularly embedded in it.

using Dart = int;

struct Port {
  int crossing = 0;
  int slot = 0;

  friend bool operator==(const Port&, const Port&) = default;
};

constexpr Dart to_dart(Port p) { return 4 * p.crossing + p.slot; }
constexpr Port to_port(Dart d) { return {d / 4, d % 4}; }
constexpr int crossing_of(Dart d) { return d / 4; }
constexpr int slot_of(Dart d) { return d % 4; }
constexpr bool is_over_slot(int slot) { return (slot & 1) != 0; }
/// Dart at the same crossing, `steps` slots counterclockwise.
constexpr Dart rotate(Dart d, int steps) {
  return 4 * crossing_of(d) + ((slot_of(d) + steps) % 4 + 4) % 4;
}
/// Continuation of the strand through the crossing.
constexpr Dart straight_across(Dart d) { return rotate(d, 2); }

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SurfaceDiagram {
 public:
  /// `partner[d]` is the dart at the other end of d's edge. Throws
  /// DiagramError unless partner is a fixed-point-free involution on 4c darts
  /// with c >= 1.
  explicit SurfaceDiagram(std::vector<Dart> partner);

  /// Builds from an edge list; throws DiagramError on reused or dangling
  /// ports.
  static SurfaceDiagram from_edges(int crossings,
                                   std::span<const std::pair<Port, Port>> edges);

  int crossing_count() const { return static_cast<int>(partner_.size()) / 4; }
  int dart_count() const { return static_cast<int>(partner_.size()); }
  int edge_count() const { return dart_count() / 2; }

  Dart partner(Dart d) const { return partner_[d]; }

  /// Next dart along the boundary of the face lying to the left of d.
  Dart face_successor(Dart d) const { return rotate(partner_[d], -1); }

  /// Next dart along the link strand: travel d's edge, then go straight
  /// through the crossing at its far end.
  Dart strand_successor(Dart d) const { return straight_across(partner_[d]); }

  /// Edges as (smaller dart, larger dart), sorted.
  std::vector<std::pair<Dart, Dart>> edges() const;

  friend bool operator==(const SurfaceDiagram&, const SurfaceDiagram&) = default;

 private:
  std::vector<Dart> partner_;
};

// ---------------------------------------------------------------------------
// Faces

struct FaceStructure {
  /// Each face is the cyclic dart sequence of its boundary, starting at its
  /// smallest dart. Faces are ordered by that smallest dart.
  std::vector<std::vector<Dart>> faces;
  /// Face to the left of each dart; equivalently the face occupying the
  /// corner between slots p and p + 1 at the dart's crossing.
  std::vector<int> face_of_dart;

  int count() const { return static_cast<int>(faces.size()); }
  /// Face in quadrant q (the corner between slots q and q + 1) of crossing x.
  int quadrant_face(int crossing, int quadrant) const {
    return face_of_dart[4 * crossing + quadrant];
  }
};

FaceStructure trace_faces(const SurfaceDiagram& d);

// ---------------------------------------------------------------------------
// Connectivity and genus

/// Connected pieces of the underlying 4-valent graph: piece index per
/// crossing, numbered in order of first crossing.
std::vector<int> diagram_pieces(const SurfaceDiagram& d);
int piece_count(const SurfaceDiagram& d);
bool is_split(const SurfaceDiagram& d);

/// A sub-diagram made of one piece, with crossings renumbered in increasing
/// order. `crossing_map[i]` is the original index of new crossing i.
struct DiagramPiece {
  SurfaceDiagram diagram;
  std::vector<int> crossing_map;
};
std::vector<DiagramPiece> split_pieces(const SurfaceDiagram& d);

/// Genus of the carrier surface. For a split diagram this is the sum over
/// pieces, i.e. the genus of their connected sum.
int genus(const SurfaceDiagram& d);
int genus(const SurfaceDiagram& d, const FaceStructure& faces);

// ---------------------------------------------------------------------------
// Link components

struct LinkComponent {
  /// Darts traversed along the strand in canonical direction, starting at the
  /// smallest dart of the component (in either direction).
  std::vector<Dart> darts;
};

/// Strand orbits, ordered by smallest dart.
std::vector<LinkComponent> link_components(const SurfaceDiagram& d);

/// True when along every component the crossing passages strictly alternate
/// between over and under.
bool is_alternating_scan(const SurfaceDiagram& d);

/// A choice of direction for every link component.
class LinkOrientation {
 public:
  /// Every component follows its canonical traversal.
  static LinkOrientation canonical(const SurfaceDiagram& d);

  /// `reversed[k]` reverses component k. Throws DiagramError on size
  /// mismatch.
  LinkOrientation(const SurfaceDiagram& d, std::vector<bool> reversed);

  int component_count() const { return static_cast<int>(reversed_.size()); }
  bool reversed(int component) const { return reversed_[component]; }
  const std::vector<bool>& reversal_flags() const { return reversed_; }
  int component_of(Dart d) const { return component_of_dart_[d]; }
  /// True when d points along the orientation of its component.
  bool is_outgoing(Dart d) const { return outgoing_[d] != 0; }

  LinkOrientation with_reversed(int component) const;

  /// "+-+" style description, one character per component.
  std::string to_string() const;

  friend bool operator==(const LinkOrientation&, const LinkOrientation&) = default;

 private:
  LinkOrientation() = default;
  void assign(const SurfaceDiagram& d, std::vector<bool> reversed);

  std::vector<bool> reversed_;
  std::vector<int> component_of_dart_;
  std::vector<char> outgoing_;
};

/// Parses a "+-+" orientation string. Throws DiagramError on bad characters
/// or wrong length.
LinkOrientation parse_orientation(const SurfaceDiagram& d, const std::string& spec);

/// Slot through which the over (resp. under) strand leaves crossing x.
int over_exit_slot(const LinkOrientation& o, int crossing);
int under_exit_slot(const LinkOrientation& o, int crossing);

struct CrossingSigns {
  std::vector<int> sign;  // +1 / -1 per crossing
  int positive = 0;
  int negative = 0;
};

/// A crossing is positive when the under-strand direction is the over-strand
/// direction turned a quarter counterclockwise.
CrossingSigns crossing_signs(const SurfaceDiagram& d, const LinkOrientation& o);

/// Exchanges over and under at one crossing by relabeling its slots one step
/// counterclockwise.
SurfaceDiagram with_crossing_switched(const SurfaceDiagram& d, int crossing);

/// Rotates the slot labels of one crossing by two, which keeps the over/under
/// assignment and the geometry.
SurfaceDiagram with_slots_rotated(const SurfaceDiagram& d, int crossing);

/// Renumbers crossings: new index of old crossing x is perm[x].
SurfaceDiagram with_crossings_relabeled(const SurfaceDiagram& d, std::span<const int> perm);

}  // namespace glpair

#endif  // GLPAIR_DIAGRAM_HPP
