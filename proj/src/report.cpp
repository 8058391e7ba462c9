#include "glpair/report.hpp"

#include <cstdlib>
#include <sstream>

namespace glpair {

namespace {

FormReport build_form(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c,
                      const LinkOrientation& o, const CorrectionTerms& mu, Color color) {
  FormReport f;
  f.color = color;
  f.graph = tait_graph(d, faces, c, color);
  f.form = gl_matrix(f.graph);
  f.result = signature_and_definiteness(f.form.gram);
  f.correction = correction_term(mu, color);
  f.euler = euler_numbers(d, faces, c, o, color);
  f.euler_from_framings = euler_number_from_framings(d, faces, c, color);
  f.sigma = sigma(f.result.signature, f.euler);
  return f;
}

void add(std::vector<IdentityCheck>& out, std::string name, bool holds, std::string detail) {
  out.push_back({std::move(name), holds, std::move(detail)});
}

std::string eq(long lhs, long rhs) {
  return std::to_string(lhs) + (lhs == rhs ? " == " : " != ") + std::to_string(rhs);
}

LinkOrientation piece_orientation(const DiagramPiece& piece, const LinkOrientation& global) {
  const auto comps = link_components(piece.diagram);
  std::vector<bool> rev(comps.size());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const Dart local = comps[k].darts.front();
    const Dart g = 4 * piece.crossing_map[crossing_of(local)] + slot_of(local);
    rev[k] = !global.is_outgoing(g);
  }
  return LinkOrientation(piece.diagram, std::move(rev));
}

/// e(F, L) == e(F) - lambda(L) for both colors over orientation choices:
/// every choice when there are at most 16 components, otherwise the given
/// orientation and each single-component reversal of it.
IdentityCheck euler_relation(const SurfaceDiagram& d, const FaceStructure& faces, const Coloring& c,
                             const LinkOrientation& base) {
  const int m = base.component_count();
  const int framed_black = euler_number_from_framings(d, faces, c, Color::black);
  const int framed_white = euler_number_from_framings(d, faces, c, Color::white);
  long checked = 0;
  auto check = [&](const LinkOrientation& o) -> std::optional<std::string> {
    ++checked;
    const int lambda = linking_matrix(d, o).total;
    for (Color col : {Color::black, Color::white}) {
      const int oriented = euler_numbers(d, faces, c, o, col).oriented;
      const int framed = col == Color::black ? framed_black : framed_white;
      if (oriented != framed - lambda)
        return "orientation " + o.to_string() + ", " + std::string(to_string(col)) + ": e(F,L)=" +
               std::to_string(oriented) + ", e(F)-lambda=" + std::to_string(framed - lambda);
    }
    return std::nullopt;
  };
  IdentityCheck out{"euler_relation", true, ""};
  if (m <= 16) {
    LinkOrientation o = base;
    for (std::uint32_t i = 0; i < (std::uint32_t{1} << m); ++i) {
      if (i > 0) o = o.with_reversed(std::countr_zero(i));  // Gray-code step
      if (auto bad = check(o)) {
        out.holds = false;
        out.detail = *bad;
        return out;
      }
    }
  } else {
    if (auto bad = check(base)) return {out.name, false, *bad};
    for (int k = 0; k < m; ++k)
      if (auto bad = check(base.with_reversed(k))) return {out.name, false, *bad};
  }
  out.detail = std::to_string(checked) + " orientations";
  return out;
}

}  // namespace

bool AnalysisReport::consistent() const {
  for (const auto& id : identities)
    if (!id.holds) return false;
  for (const auto& p : piece_reports)
    if (!p.consistent()) return false;
  return true;
}

std::optional<Coloring> preferred_coloring(const SurfaceDiagram& d, const FaceStructure& faces) {
  const auto all = checkerboard_colorings(d, faces);
  if (all.empty()) return std::nullopt;
  const auto o = LinkOrientation::canonical(d);
  int best = -1;
  std::size_t pick = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int b = count_types(classify_crossings(d, faces, all[i], o)).b;
    if (b > best) {
      best = b;
      pick = i;
    }
  }
  return all[pick];
}

std::optional<bool> verdict_alternating_by_definiteness(const AnalysisReport& r) {
  if (r.split || !r.black || !r.white) return std::nullopt;
  const auto& b = r.black->result;
  const auto& w = r.white->result;
  return (b.negative_or_empty() && w.positive_or_empty()) || (b.positive_or_empty() && w.negative_or_empty());
}

std::optional<bool> verdict_minimal_genus(const AnalysisReport& r) {
  if (r.split || !r.black || !r.white) return std::nullopt;
  return r.black->result.nonsingular() && r.white->result.nonsingular();
}

AnalysisReport analyze(const SurfaceDiagram& d, std::optional<LinkOrientation> orientation) {
  const LinkOrientation o = orientation ? *orientation : LinkOrientation::canonical(d);
  const FaceStructure faces = trace_faces(d);

  AnalysisReport r;
  r.crossings = d.crossing_count();
  r.faces = faces.count();
  r.genus = genus(d, faces);
  r.components = o.component_count();
  r.pieces = piece_count(d);
  r.split = r.pieces > 1;
  r.orientation = o.to_string();
  r.signs = crossing_signs(d, o);
  r.alternating_scan = is_alternating_scan(d);
  r.linking = linking_matrix(d, o);

  const auto colorings = checkerboard_colorings(d, faces);
  const auto homology = homology_obstruction(d, faces);
  r.colorable = !colorings.empty();
  r.colorable_homology = homology.solvable;
  add(r.identities, "colorability_methods_agree", r.colorable == r.colorable_homology,
      std::string("parity ") + (r.colorable ? "colorable" : "not colorable") + ", homology " +
          (r.colorable_homology ? "solvable" : "unsolvable"));
  if (homology.solvable) {
    Coloring from_homology;
    for (bool in : homology.faces) from_homology.face_color.push_back(in ? Color::black : Color::white);
    add(r.identities, "homology_solution_is_coloring", is_valid_coloring(d, faces, from_homology), "");
  }
  if (!r.colorable) return r;

  if (r.split) {
    r.coloring = colorings.front();
    r.alpha = r.coloring->alpha();
    r.beta = r.coloring->beta();
    r.classes = classify_crossings(d, faces, *r.coloring, o);
    r.types = count_types(r.classes);
    for (const auto& piece : split_pieces(d))
      r.piece_reports.push_back(analyze(piece.diagram, piece_orientation(piece, o)));
    return r;
  }

  r.coloring = preferred_coloring(d, faces);
  r.alpha = r.coloring->alpha();
  r.beta = r.coloring->beta();
  r.classes = classify_crossings(d, faces, *r.coloring, o);
  r.types = count_types(r.classes);
  r.mu = correction_terms(r.classes);
  r.black = build_form(d, faces, *r.coloring, o, *r.mu, Color::black);
  r.white = build_form(d, faces, *r.coloring, o, *r.mu, Color::white);
  r.alternating_by_definiteness = verdict_alternating_by_definiteness(r);
  r.minimal_genus_certified = verdict_minimal_genus(r);

  auto suite = check_identity_suite(d, r);
  r.identities.insert(r.identities.end(), suite.begin(), suite.end());
  return r;
}

std::vector<IdentityCheck> check_identity_suite(const SurfaceDiagram& d, const AnalysisReport& r) {
  std::vector<IdentityCheck> out;
  if (r.split || !r.black || !r.white || !r.mu || !r.coloring) return out;
  const int c = r.crossings, g = r.genus;
  const int nb = r.black->result.size, nw = r.white->result.size;

  add(out, "face_count", r.alpha + r.beta == 2 - 2 * g + c, eq(r.alpha + r.beta, 2 - 2 * g + c));
  add(out, "betti_white", nw == 2 * g + r.beta - 1, eq(nw, 2 * g + r.beta - 1));
  add(out, "betti_black", nb == 2 * g + r.alpha - 1, eq(nb, 2 * g + r.alpha - 1));
  add(out, "betti_sum", nb + nw == 2 * g + c, eq(nb + nw, 2 * g + c));
  for (const FormReport* f : {&*r.black, &*r.white}) {
    const int expected = f->graph.cycle_rank();
    add(out, std::string("rank_bookkeeping_") + std::string(to_string(f->color)), f->result.size == expected,
        eq(f->result.size, expected));
  }

  const int mu_diff = r.mu->white - r.mu->black;
  add(out, "mu_bound", std::abs(mu_diff) <= c, std::to_string(std::abs(mu_diff)) + " <= " + std::to_string(c));
  add(out, "mu_difference", mu_diff == r.types.b - r.types.a, eq(mu_diff, r.types.b - r.types.a));
  {
    const bool equality = std::abs(mu_diff) == c;
    const bool one_type = r.types.a == 0 || r.types.b == 0;
    add(out, "mu_equality", equality == one_type,
        std::string("equality ") + (equality ? "yes" : "no") + ", single type " + (one_type ? "yes" : "no"));
  }

  const FaceStructure faces = trace_faces(d);
  {
    // Reconstruct the orientation the report was computed under.
    std::vector<bool> rev;
    for (char ch : r.orientation) rev.push_back(ch == '-');
    out.push_back(euler_relation(d, faces, *r.coloring, LinkOrientation(d, std::move(rev))));
  }

  for (const FormReport* f : {&*r.black, &*r.white}) {
    const auto& res = f->result;
    bool ok;
    if (res.nonsingular()) {
      Rational prod = 1;
      for (const auto& p : res.pivots) prod *= p;
      ok = prod == Rational(res.determinant);
    } else {
      ok = res.determinant == 0;
    }
    add(out, std::string("determinant_routes_") + std::string(to_string(f->color)), ok,
        "det " + res.determinant.get_str());
  }

  const int gap = r.white->sigma - r.black->sigma;
  add(out, "signature_gap_bound", std::abs(gap) <= 2 * g,
      std::to_string(std::abs(gap)) + " <= " + std::to_string(2 * g));
  if (g == 0) add(out, "classical_signature_agreement", gap == 0, eq(r.white->sigma, r.black->sigma));

  const bool by_def = r.alternating_by_definiteness.value_or(false);
  add(out, "definiteness_biconditional", r.alternating_scan == by_def,
      std::string("scan ") + (r.alternating_scan ? "alternating" : "not alternating") + ", definiteness " +
          (by_def ? "alternating" : "not alternating"));
  if (r.alternating_scan) {
    add(out, "alternating_single_type", r.types.a == 0, "type a crossings: " + std::to_string(r.types.a));
    add(out, "alternating_signature_gap", gap == 2 * g, eq(gap, 2 * g));
    add(out, "alternating_minimal_genus", r.minimal_genus_certified.value_or(false), "");
  }
  return out;
}

namespace {

nlohmann::ordered_json integer_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

nlohmann::ordered_json matrix_json(const IntMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json form_json(const FormReport& f) {
  nlohmann::ordered_json j;
  j["size"] = f.result.size;
  j["matrix"] = matrix_json(f.form.gram);
  j["basis"] = {{"forest_edges", f.form.forest_edges}, {"cycle_edges", f.form.cycle_edges}};
  std::vector<int> labels;
  for (const auto& e : f.graph.edges) labels.push_back(e.label);
  j["tait_vertices"] = f.graph.vertex_count();
  j["tait_labels"] = labels;
  j["signature"] = f.result.signature;
  j["determinant"] = integer_json(f.result.determinant);
  j["rank"] = f.result.rank;
  j["verdict"] = std::string(to_string(f.result.verdict));
  j["mu"] = f.correction;
  j["euler_oriented"] = f.euler.oriented;
  j["euler"] = f.euler.surface;
  j["sigma"] = f.sigma;
  return j;
}

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["crossings"] = r.crossings;
  j["genus"] = r.genus;
  j["faces"] = r.faces;
  j["components"] = r.components;
  j["pieces"] = r.pieces;
  j["split"] = r.split;
  j["orientation"] = r.orientation;
  j["crossing_signs"] = r.signs.sign;
  j["positive_crossings"] = r.signs.positive;
  j["negative_crossings"] = r.signs.negative;
  j["alternating_scan"] = r.alternating_scan;
  j["colorable"] = r.colorable;
  j["colorable_homology"] = r.colorable_homology;
  if (r.coloring) {
    std::vector<std::string> colors;
    for (Color c : r.coloring->face_color) colors.emplace_back(to_string(c));
    j["coloring"] = colors;
    j["white_regions"] = r.alpha;
    j["black_regions"] = r.beta;
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : r.classes)
      classes.push_back({{"color_type", c.color_type == ColorType::a ? "a" : "b"},
                         {"orientation_type", c.orientation_type == OrientationType::I ? "I" : "II"},
                         {"incidence", c.incidence}});
    j["crossing_classes"] = classes;
    j["type_a"] = r.types.a;
    j["type_b"] = r.types.b;
  } else {
    j["coloring"] = nullptr;
  }
  if (r.black && r.white) {
    j["forms"] = {{"black", form_json(*r.black)}, {"white", form_json(*r.white)}};
    j["mu_white"] = r.mu->white;
    j["mu_black"] = r.mu->black;
    j["signature_black"] = r.black->sigma;
    j["signature_white"] = r.white->sigma;
  } else {
    j["forms"] = nullptr;
  }
  auto lk = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < r.linking.matrix.rows(); ++i) {
    std::vector<int> row;
    for (Eigen::Index k = 0; k < r.linking.matrix.cols(); ++k) row.push_back(r.linking.matrix(i, k));
    lk.push_back(row);
  }
  j["linking_matrix"] = lk;
  j["total_linking"] = r.linking.total;
  j["alternating_by_definiteness"] = optional_json(r.alternating_by_definiteness);
  j["minimal_genus_certified"] = optional_json(r.minimal_genus_certified);
  auto ids = nlohmann::ordered_json::array();
  for (const auto& id : r.identities) ids.push_back({{"name", id.name}, {"holds", id.holds}, {"detail", id.detail}});
  j["identities"] = ids;
  if (!r.piece_reports.empty()) {
    auto pieces = nlohmann::ordered_json::array();
    for (const auto& p : r.piece_reports) pieces.push_back(to_json(p));
    j["piece_reports"] = pieces;
  }
  j["consistent"] = r.consistent();
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  auto opt = [&](const std::optional<bool>& b) { return b ? yn(*b) : "n/a"; };
  out << "crossings:        " << r.crossings << "\n"
      << "genus:            " << r.genus << "\n"
      << "faces:            " << r.faces << "\n"
      << "components:       " << r.components << "  (orientation " << r.orientation << ")\n"
      << "split:            " << yn(r.split) << "\n"
      << "signs:            c+ = " << r.signs.positive << ", c- = " << r.signs.negative << "\n"
      << "alternating:      " << yn(r.alternating_scan) << "\n"
      << "colorable:        " << yn(r.colorable) << "\n";
  if (r.coloring)
    out << "regions:          " << r.alpha << " white, " << r.beta << " black; type a " << r.types.a
        << ", type b " << r.types.b << "\n";
  for (const auto* f : {r.black ? &*r.black : nullptr, r.white ? &*r.white : nullptr}) {
    if (!f) continue;
    out << to_string(f->color) << " form:       size " << f->result.size << ", signature " << f->result.signature
        << ", det " << f->result.determinant.get_str() << ", " << to_string(f->result.verdict) << "\n"
        << "  mu = " << f->correction << ", e(F,L) = " << f->euler.oriented << ", e(F) = " << f->euler.surface
        << ", sigma = " << f->sigma << "\n";
  }
  out << "total linking:    " << r.linking.total << "\n"
      << "alternating by definiteness: " << opt(r.alternating_by_definiteness) << "\n"
      << "minimal genus certified:     " << opt(r.minimal_genus_certified) << "\n";
  for (const auto& id : r.identities)
    out << (id.holds ? "  ok   " : "  FAIL ") << id.name << (id.detail.empty() ? "" : "  (" + id.detail + ")")
        << "\n";
  for (std::size_t i = 0; i < r.piece_reports.size(); ++i) {
    out << "--- piece " << i << "\n" << to_text(r.piece_reports[i]);
  }
  return out.str();
}

}  // namespace glpair
