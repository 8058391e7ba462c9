#ifndef GLPAIR_REPORT_HPP
#define GLPAIR_REPORT_HPP

#include "glpair/coloring.hpp"
#include "glpair/diagram.hpp"
#include "glpair/invariants.hpp"
#include "glpair/symmetric_form.hpp"
#include "glpair/tait_graph.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace glpair {

struct FormReport {
  Color color = Color::black;
  TaitGraph graph;
  SymmetricForm form;
  SignatureResult result;
  int correction = 0;        // mu_F(D)
  EulerNumbers euler;        // e(F, L), e(F)
  int euler_from_framings = 0;
  int sigma = 0;             // sigma_F(L)
};

struct IdentityCheck {
  std::string name;
  bool holds = true;
  std::string detail;
};

struct AnalysisReport {
  int crossings = 0;
  int genus = 0;
  int faces = 0;
  int components = 0;
  int pieces = 1;
  bool split = false;

  std::string orientation;  // "+-" per component
  CrossingSigns signs;
  bool alternating_scan = false;

  bool colorable = false;
  bool colorable_homology = false;
  std::optional<Coloring> coloring;
  int alpha = 0;  // white faces
  int beta = 0;   // black faces
  std::vector<CrossingClass> classes;
  TypeCounts types;

  std::optional<FormReport> black;
  std::optional<FormReport> white;
  std::optional<CorrectionTerms> mu;

  LinkingData linking;

  std::optional<bool> alternating_by_definiteness;
  std::optional<bool> minimal_genus_certified;

  std::vector<IdentityCheck> identities;
  /// Per-piece analyses of a split diagram; the verdicts above stay empty.
  std::vector<AnalysisReport> piece_reports;

  /// All identity checks held, including those of the pieces.
  bool consistent() const;
};

/// The coloring used for reports: the one with the most type-b crossings,
/// ties going to the first from checkerboard_colorings. For an alternating
/// diagram every crossing is then type b.
std::optional<Coloring> preferred_coloring(const SurfaceDiagram& d, const FaceStructure& faces);

/// Full analysis. Uses the canonical orientation when none is given.
AnalysisReport analyze(const SurfaceDiagram& d, std::optional<LinkOrientation> orientation = std::nullopt);

/// True iff one checkerboard form is negative definite (or empty) and the
/// other positive definite (or empty). Empty for split or non-colorable
/// diagrams.
std::optional<bool> verdict_alternating_by_definiteness(const AnalysisReport& r);

/// True iff both checkerboard forms are non-singular (empty forms count as
/// non-singular). False means "not certified". Empty for split or
/// non-colorable diagrams.
std::optional<bool> verdict_minimal_genus(const AnalysisReport& r);

/// Evaluates every identity that applies to a connected colorable diagram.
/// Any failure indicates a bug.
std::vector<IdentityCheck> check_identity_suite(const SurfaceDiagram& d, const AnalysisReport& r);

nlohmann::ordered_json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

}  // namespace glpair

#endif  // GLPAIR_REPORT_HPP
