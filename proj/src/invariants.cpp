#include "glpair/invariants.hpp"

#include "glpair/tait_graph.hpp"

namespace glpair {

LinkingData linking_matrix(const SurfaceDiagram& d, const LinkOrientation& o) {
  const int m = o.component_count();
  LinkingData out;
  out.matrix = Eigen::MatrixXi::Zero(m, m);
  const auto signs = crossing_signs(d, o);
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int over = o.component_of(4 * x + 1);
    const int under = o.component_of(4 * x + 0);
    if (over == under) continue;
    out.matrix(over, under) += signs.sign[x];
    out.total += signs.sign[x];
  }
  return out;
}

CorrectionTerms correction_terms(const std::vector<CrossingClass>& classes) {
  CorrectionTerms mu;
  for (const auto& c : classes) {
    if (c.orientation_type == OrientationType::I) mu.white -= c.incidence;
    else mu.black += c.incidence;
  }
  return mu;
}

int correction_term(const CorrectionTerms& mu, Color color) {
  return color == Color::black ? mu.black : mu.white;
}

EulerNumbers euler_numbers(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c,
                           const LinkOrientation& o, Color color) {
  const auto mu = correction_terms(classify_crossings(d, faces, c, o));
  EulerNumbers e;
  e.oriented = -2 * correction_term(mu, color);
  e.surface = e.oriented + linking_matrix(d, o).total;
  return e;
}

int euler_number_from_framings(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c,
                               Color color) {
  const auto o = LinkOrientation::canonical(d);
  const auto g = tait_graph(d, faces, c, color);
  int e = 0;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int label = g.edges[x].label;
    if (o.component_of(4 * x + 0) != o.component_of(4 * x + 1)) {
      e -= label;
      continue;
    }
    // Both strands belong to one component, so reversing it leaves purity
    // unchanged.
    const bool f_even = even_quadrant_color(faces, c, x) == color;
    if (f_even == even_quadrants_pure(o, x)) e -= 2 * label;
  }
  return e;
}

int sigma(int form_signature, const EulerNumbers& e) { return form_signature + e.oriented / 2; }

int sigma(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c, const LinkOrientation& o,
          Color color) {
  const auto form = gl_matrix(tait_graph(d, faces, c, color));
  return sigma(signature_and_definiteness(form.gram).signature, euler_numbers(d, faces, c, o, color));
}

}  // namespace glpair
