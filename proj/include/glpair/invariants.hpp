#ifndef GLPAIR_INVARIANTS_HPP
#define GLPAIR_INVARIANTS_HPP

#include "glpair/coloring.hpp"
#include "glpair/diagram.hpp"
#include "glpair/symmetric_form.hpp"

#include <Eigen/Core>

namespace glpair {

struct LinkingData {
  /// lk(K_i, K_j) for i != j: signed count of crossings where K_i passes over
  /// K_j. The diagonal is left at zero (self-linking depends on a framing).
  Eigen::MatrixXi matrix;
  /// Sum of all off-diagonal entries.
  int total = 0;
};

LinkingData linking_matrix(const SurfaceDiagram& d, const LinkOrientation& o);

struct CorrectionTerms {
  int white = 0;  // sum over type I crossings of -incidence
  int black = 0;  // sum over type II crossings of incidence
};

CorrectionTerms correction_terms(const std::vector<CrossingClass>& classes);

int correction_term(const CorrectionTerms& mu, Color color);

struct EulerNumbers {
  int oriented = 0;  // e(F, L) = -2 mu_F
  int surface = 0;   // e(F) = e(F, L) + lambda(L)
};

EulerNumbers euler_numbers(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c,
                           const LinkOrientation& o, Color color);

/// e(F) from self-framings of the components, without reference to a link
/// orientation: crossings between distinct components contribute minus the
/// Tait label of F there; a self-crossing whose F-corners are pure
/// contributes minus twice the label.
int euler_number_from_framings(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c,
                               Color color);

/// sigma_F(L) = sig(G_F) + e(F, L) / 2.
int sigma(int form_signature, const EulerNumbers& e);

/// Convenience: the full chain from a diagram to sigma_F(L).
int sigma(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c, const LinkOrientation& o,
          Color color);

}  // namespace glpair

#endif  // GLPAIR_INVARIANTS_HPP
