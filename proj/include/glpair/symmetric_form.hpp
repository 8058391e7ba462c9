#ifndef GLPAIR_SYMMETRIC_FORM_HPP
#define GLPAIR_SYMMETRIC_FORM_HPP

#include "glpair/scalar.hpp"
#include "glpair/tait_graph.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace glpair {

/// Gram matrix of the pairing on the cycle space of a Tait graph, together
/// with the cycle basis it was computed in.
struct SymmetricForm {
  IntMatrix gram;               // n x n, symmetric
  IntMatrix cycles;             // (edges) x n, entries -1/0/+1; column j is basis cycle j
  std::vector<int> forest_edges;  // crossings whose edges form the spanning forest
  std::vector<int> cycle_edges;   // crossing that closes each basis cycle

  int size() const { return static_cast<int>(gram.rows()); }
};

/// Builds A^T diag(label) A, where the columns of A are the fundamental cycles
/// of a spanning forest. The forest is grown breadth-first from the lowest
/// vertex of each component, scanning edges in `edge_priority` order (all
/// edges in crossing order when empty).
SymmetricForm gl_matrix(const TaitGraph& g, std::span<const int> edge_priority = {});

/// Value of the pairing on an integer edge-coefficient vector:
/// sum over edges of label * coefficient^2 for a single cycle.
Integer pairing_on_cycle(const TaitGraph& g, const Vector<Integer>& edge_coefficients);

enum class Definiteness { positive_definite, negative_definite, indefinite, singular, empty };

std::string_view to_string(Definiteness d);

struct SignatureResult {
  int size = 0;
  int signature = 0;
  int rank = 0;
  Integer determinant = 1;
  Definiteness verdict = Definiteness::empty;
  /// Diagonal of the congruence-diagonalized form (nonzero pivots only).
  std::vector<Rational> pivots;

  bool nonsingular() const { return rank == size; }
  /// Negative definite, or the empty form.
  bool negative_or_empty() const {
    return verdict == Definiteness::negative_definite || verdict == Definiteness::empty;
  }
  bool positive_or_empty() const {
    return verdict == Definiteness::positive_definite || verdict == Definiteness::empty;
  }
};

namespace detail {
SignatureResult congruence_signature(RatMatrix m, const IntMatrix& exact);
Integer bareiss_determinant(IntMatrix a);
}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination over the integers.
template <typename Derived>
Integer bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
  return detail::bareiss_determinant(m.template cast<Integer>());
}

/// Exact signature, rank, determinant and definiteness of a symmetric
/// integer matrix. Diagonalizes by congruence over the rationals with
/// symmetric pivoting; a zero pivot with a nonzero row is repaired by adding
/// a partner row and column first.
template <typename Derived>
SignatureResult signature_and_definiteness(const Eigen::MatrixBase<Derived>& m) {
  const IntMatrix exact = m.template cast<Integer>();
  return detail::congruence_signature(exact.template cast<Rational>(), exact);
}

}  // namespace glpair

#endif  // GLPAIR_SYMMETRIC_FORM_HPP
