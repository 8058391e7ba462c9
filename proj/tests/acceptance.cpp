// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "glpair/gauss_code.hpp"
#include "glpair/oracle.hpp"
#include "glpair/report.hpp"
#include "glpair/sld_format.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>

using namespace glpair;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string data_path(const std::string& name) { return std::string(GLPAIR_TEST_DATA_DIR) + "/" + name; }

// The population shared by criteria 4, 5 and 8.
const std::vector<SurfaceDiagram>& sweep_population() {
  static const std::vector<SurfaceDiagram> population = [] {
    oracle::RandomDiagramSpec spec{.min_crossings = 1,
                                   .max_crossings = 8,
                                   .seed = 20240601,
                                   .count = 1200,
                                   .connected = true,
                                   .colorable = true};
    return oracle::random_diagrams(spec);
  }();
  return population;
}

bool holds(const AnalysisReport& r, const std::string& name) {
  for (const auto& id : r.identities)
    if (id.name == name) return id.holds;
  return false;
}

Outcome criterion_trefoil() {
  const auto t0 = Clock::now();
  Outcome out;
  const auto doc = read_sld_file(data_path("trefoil.sld"));
  const auto from_code = from_virtual_gauss_code("O1+U2+O3+U1+O2+U3+");
  for (const auto& [d, o] : {std::pair{doc.diagram, doc.orientation()}, std::pair{from_code.diagram, from_code.orientation}}) {
    const auto r = analyze(d, o);
    const bool ok = r.genus == 0 && r.colorable && r.black && r.white && r.black->result.size == 2 &&
                    r.black->result.verdict == Definiteness::negative_definite && r.black->result.determinant == 3 &&
                    // An even form (all diagonal entries even) of this size,
                    // sign and determinant is congruent to [[-2,1],[1,-2]].
                    r.black->form.gram(0, 0) % 2 == 0 && r.black->form.gram(1, 1) % 2 == 0 &&
                    r.black->sigma == -2 && r.white->sigma == -2 && r.minimal_genus_certified == true;
    out.pass &= ok;
  }
  const double s = seconds_since(t0);
  out.pass &= s < 1.0;
  out.detail = "genus 0, G_B even negative-definite det 3, sigma_B = sigma_W = -2, certified (" + std::to_string(s) + " s)";
  return out;
}

Outcome criterion_virtual_trefoil() {
  const auto t0 = Clock::now();
  const auto g = from_virtual_gauss_code("O1+O2+U1+U2+");
  const auto faces = trace_faces(g.diagram);
  const bool parity = !checkerboard_colorings(g.diagram, faces).empty();
  const bool homology = homology_obstruction(g.diagram, faces).solvable;
  const double s = seconds_since(t0);
  Outcome out;
  out.pass = genus(g.diagram) == 1 && !parity && !homology && s < 1.0;
  out.detail = "genus " + std::to_string(genus(g.diagram)) + ", parity " + (parity ? "colorable" : "not colorable") +
               ", homology " + (homology ? "solvable" : "unsolvable") + " (" + std::to_string(s) + " s)";
  return out;
}

Outcome criterion_torus_link() {
  const auto doc = read_sld_file(data_path("torus_link.sld"));
  const auto lk = linking_matrix(doc.diagram, doc.orientation()).matrix;
  // Components 0, 1, 2 are J, K, L.
  const int expected[3][3] = {{0, 0, -1}, {-1, 0, 0}, {0, 1, 0}};
  bool same = true, negated = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      same &= lk(i, j) == expected[i][j];
      negated &= lk(i, j) == -expected[i][j];
    }
  std::ostringstream detail;
  detail << "lk(J,K)=" << lk(0, 1) << " lk(K,J)=" << lk(1, 0) << " lk(J,L)=" << lk(0, 2) << " lk(L,J)=" << lk(2, 0)
         << " lk(K,L)=" << lk(1, 2) << " lk(L,K)=" << lk(2, 1) << (same ? ", exact match" : negated ? ", negated" : "");
  return {same || negated, detail.str()};
}

Outcome criterion_identity_sweep() {
  const auto t0 = Clock::now();
  long failures = 0, diagrams = 0;
  for (const auto& d : sweep_population()) {
    const auto r = analyze(d);
    ++diagrams;
    for (const char* name : {"face_count", "betti_sum", "mu_bound", "mu_equality", "euler_relation"})
      if (!holds(r, name)) ++failures;
  }
  const double s = seconds_since(t0);
  return {failures == 0 && diagrams >= 1000 && s < 60.0,
          std::to_string(diagrams) + " diagrams, " + std::to_string(failures) + " failures (" + std::to_string(s) +
              " s)"};
}

Outcome criterion_biconditional() {
  long discrepancies = 0, alternating = 0;
  for (const auto& d : sweep_population()) {
    const auto r = analyze(d);
    alternating += r.alternating_scan;
    if (!r.alternating_by_definiteness || *r.alternating_by_definiteness != is_alternating_scan(d)) ++discrepancies;
  }
  return {discrepancies == 0, std::to_string(sweep_population().size()) + " diagrams (" +
                                  std::to_string(alternating) + " alternating), " + std::to_string(discrepancies) +
                                  " discrepancies"};
}

Outcome criterion_alternating_gap() {
  oracle::RandomDiagramSpec spec{
      .min_crossings = 1, .max_crossings = 8, .seed = 77, .count = 150, .connected = true, .alternating = true};
  long failures = 0, positive_genus = 0;
  for (const auto& d : oracle::random_diagrams(spec)) {
    const auto r = analyze(d);
    if (!r.colorable) {
      ++failures;
      continue;
    }
    positive_genus += r.genus > 0;
    if (r.white->sigma - r.black->sigma != 2 * r.genus) ++failures;
  }
  return {failures == 0, "150 alternating diagrams (" + std::to_string(positive_genus) + " of positive genus), " +
                             std::to_string(failures) + " failures"};
}

Outcome criterion_linear_algebra() {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> size(1, 12);
  long float_mismatch = 0, brute_contradictions = 0, brute_checked = 0, tested = 0;
  while (tested < 500) {
    const int n = size(rng);
    const auto m = oracle::random_symmetric(n, -10, 10, rng);
    const auto exact = signature_and_definiteness(m);
    if (!exact.nonsingular()) continue;
    ++tested;
    if (exact.signature != oracle::float_signature(m)) ++float_mismatch;
    if (n > 6) continue;
    ++brute_checked;
    const int bound = n <= 4 ? 4 : n == 5 ? 3 : 2;
    const auto brute = oracle::brute_force_definiteness(m, bound);
    const bool definite = exact.verdict == Definiteness::positive_definite ||
                          exact.verdict == Definiteness::negative_definite;
    bool contradiction = false;
    switch (brute) {
      case oracle::BruteVerdict::indefinite:
      case oracle::BruteVerdict::isotropic: contradiction = definite; break;
      case oracle::BruteVerdict::positive_within_bound:
        contradiction = exact.verdict == Definiteness::negative_definite;
        break;
      case oracle::BruteVerdict::negative_within_bound:
        contradiction = exact.verdict == Definiteness::positive_definite;
        break;
      case oracle::BruteVerdict::empty: contradiction = true; break;
    }
    brute_contradictions += contradiction;
  }
  return {float_mismatch == 0 && brute_contradictions == 0,
          std::to_string(tested) + " nonsingular matrices, " + std::to_string(float_mismatch) +
              " float mismatches; " + std::to_string(brute_checked) + " brute-force checks, " +
              std::to_string(brute_contradictions) + " contradictions"};
}

Outcome criterion_colorability() {
  long checked = 0, disagreements = 0, split = 0, non_colorable = 0;
  auto check = [&](const SurfaceDiagram& d) {
    const auto faces = trace_faces(d);
    const bool parity = !checkerboard_colorings(d, faces).empty();
    ++checked;
    split += is_split(d);
    non_colorable += !parity;
    if (parity != homology_obstruction(d, faces).solvable) ++disagreements;
  };
  for (const auto& d : sweep_population()) check(d);
  oracle::RandomDiagramSpec spec{.min_crossings = 1, .max_crossings = 8, .seed = 99, .count = 2000};
  for (const auto& d : oracle::random_diagrams(spec)) check(d);
  const bool covered = split > 0 && non_colorable > 0;
  return {disagreements == 0 && covered, std::to_string(checked) + " diagrams (" + std::to_string(split) + " split, " +
                                             std::to_string(non_colorable) + " non-colorable), " +
                                             std::to_string(disagreements) + " disagreements"};
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(GLPAIR_CLI_PATH) + " " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

Outcome criterion_determinism() {
  const std::vector<std::string> commands = {
      "analyze " + data_path("trefoil.sld") + " --json",
      "analyze " + data_path("torus_link.sld") + " --json",
      "suite --max-crossings 6 --count 200 --seed 7 --json",
  };
  long mismatches = 0;
  for (const auto& c : commands) {
    const auto a = run_cli(c), b = run_cli(c);
    if (a.empty() || a != b) ++mismatches;
  }
  // In-process: two passes over the same seeded stream.
  oracle::RandomDiagramSpec spec{.min_crossings = 1, .max_crossings = 8, .seed = 5, .count = 100, .connected = true};
  const auto first = oracle::random_diagrams(spec), second = oracle::random_diagrams(spec);
  for (std::size_t i = 0; i < first.size(); ++i)
    if (to_json(analyze(first[i])).dump() != to_json(analyze(second[i])).dump()) ++mismatches;
  return {mismatches == 0, std::to_string(commands.size()) + " CLI commands and 100 in-process reports, " +
                               std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"trefoil golden test", criterion_trefoil},
      {"virtual trefoil", criterion_virtual_trefoil},
      {"torus link linking numbers", criterion_torus_link},
      {"identity sweep", criterion_identity_sweep},
      {"definiteness biconditional", criterion_biconditional},
      {"alternating signature gap", criterion_alternating_gap},
      {"linear-algebra cross-validation", criterion_linear_algebra},
      {"colorability equivalence", criterion_colorability},
      {"determinism", criterion_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
