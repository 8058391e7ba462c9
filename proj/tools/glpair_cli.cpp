#include "glpair/gauss_code.hpp"
#include "glpair/oracle.hpp"
#include "glpair/report.hpp"
#include "glpair/sld_format.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using glpair::AnalysisReport;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolation = 2;

struct Input {
  glpair::SurfaceDiagram diagram;
  glpair::LinkOrientation orientation;
};

Input load(const std::string& source, bool gauss, const std::string& orient) {
  if (gauss) {
    auto g = glpair::from_virtual_gauss_code(source);
    if (!orient.empty()) return {g.diagram, glpair::parse_orientation(g.diagram, orient)};
    return {g.diagram, g.orientation};
  }
  auto doc = glpair::read_sld_file(source);
  if (!orient.empty()) return {doc.diagram, glpair::parse_orientation(doc.diagram, orient)};
  return {doc.diagram, doc.orientation()};
}

int print_report(const AnalysisReport& r, bool json) {
  if (json) std::cout << glpair::to_json(r).dump(2) << "\n";
  else std::cout << glpair::to_text(r);
  return r.consistent() ? kOk : kViolation;
}

ordered_json verdicts_json(const AnalysisReport& r) {
  ordered_json j;
  j["genus"] = r.genus;
  j["colorable"] = r.colorable;
  j["split"] = r.split;
  auto opt = [](const std::optional<bool>& b) -> ordered_json { return b ? ordered_json(*b) : ordered_json(); };
  j["alternating_by_definiteness"] = opt(r.alternating_by_definiteness);
  j["minimal_genus_certified"] = opt(r.minimal_genus_certified);
  j["consistent"] = r.consistent();
  return j;
}

struct SuiteTally {
  std::map<std::string, std::pair<long, long>> identities;  // name -> (pass, fail)
  long diagrams = 0;
  long alternating = 0;
  long colorability_checked = 0;
  long colorability_disagreements = 0;

  void record(const AnalysisReport& r) {
    for (const auto& id : r.identities) {
      auto& [pass, fail] = identities[id.name];
      (id.holds ? pass : fail) += 1;
    }
  }
  long failures() const {
    long f = colorability_disagreements;
    for (const auto& [name, pf] : identities) f += pf.second;
    return f;
  }
};

int run_suite(int max_crossings, int count, std::uint64_t seed, bool json) {
  SuiteTally t;
  glpair::oracle::RandomDiagramSpec spec;
  spec.min_crossings = 1;
  spec.max_crossings = max_crossings;
  spec.seed = seed;
  spec.connected = true;
  spec.colorable = true;
  glpair::oracle::RandomDiagrams connected(spec);
  for (int i = 0; i < count; ++i) {
    const auto r = glpair::analyze(connected.next());
    ++t.diagrams;
    t.alternating += r.alternating_scan;
    t.record(r);
  }
  // Unfiltered draws exercise split and non-colorable diagrams as well.
  spec.connected = spec.colorable = false;
  spec.seed = seed ^ 0x9e3779b97f4a7c15ULL;
  glpair::oracle::RandomDiagrams any(spec);
  for (int i = 0; i < count; ++i) {
    const auto d = any.next();
    const auto faces = glpair::trace_faces(d);
    ++t.colorability_checked;
    if (glpair::checkerboard_colorings(d, faces).empty() == glpair::homology_obstruction(d, faces).solvable)
      ++t.colorability_disagreements;
  }

  if (json) {
    ordered_json j;
    j["seed"] = seed;
    j["max_crossings"] = max_crossings;
    j["diagrams"] = t.diagrams;
    j["alternating"] = t.alternating;
    auto ids = ordered_json::object();
    for (const auto& [name, pf] : t.identities) ids[name] = {{"pass", pf.first}, {"fail", pf.second}};
    j["identities"] = ids;
    j["colorability"] = {{"checked", t.colorability_checked}, {"disagreements", t.colorability_disagreements}};
    j["failures"] = t.failures();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "diagrams: " << t.diagrams << " (" << t.alternating << " alternating)\n";
    for (const auto& [name, pf] : t.identities)
      std::cout << "  " << name << ": " << pf.first << " pass, " << pf.second << " fail\n";
    std::cout << "  colorability methods: " << t.colorability_checked - t.colorability_disagreements << " agree, "
              << t.colorability_disagreements << " disagree\n"
              << "failures: " << t.failures() << "\n";
  }
  return t.failures() == 0 ? kOk : kViolation;
}

int run_random(const glpair::oracle::RandomDiagramSpec& spec, const std::string& out_dir) {
  const auto diagrams = glpair::oracle::random_diagrams(spec);
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    const std::string text = glpair::serialize_sld(diagrams[i]);
    if (out_dir.empty()) {
      std::cout << "# diagram " << i << "\n" << text << "\n";
      continue;
    }
    char name[32];
    std::snprintf(name, sizeof name, "random_%04zu.sld", i);
    std::ofstream(std::filesystem::path(out_dir) / name) << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gordon-Litherland pairings and definiteness certificates for link diagrams on surfaces", "glpair"};
  app.require_subcommand(1);

  bool json = false;
  std::string orient, input, out_dir;
  bool gauss_input = false, connected = false, colorable = false, alternating = false;
  std::uint64_t seed = 1;
  int count = 10, crossings = 0, max_crossings = 6;

  auto* analyze = app.add_subcommand("analyze", "Analyze a diagram stored in an .sld file");
  analyze->add_option("file", input, ".sld file")->required();
  auto* import = app.add_subcommand("import-gauss", "Analyze a signed virtual Gauss code");
  import->add_option("code", input, "Gauss code, e.g. O1+O2+U1+U2+")->required();
  auto* certify = app.add_subcommand("certify", "Print only the definiteness and minimal-genus verdicts");
  certify->add_option("input", input, ".sld file, or a Gauss code with --gauss")->required();
  certify->add_flag("--gauss", gauss_input, "Treat the input as a Gauss code");
  for (auto* sub : {analyze, import, certify}) {
    sub->add_flag("--json", json, "Emit JSON");
    sub->add_option("--orient", orient, "Per-component orientation, e.g. +-+");
  }

  auto* random = app.add_subcommand("random", "Generate random diagrams as .sld text");
  random->add_option("--seed", seed, "Generator seed");
  random->add_option("--count", count, "Number of diagrams")->check(CLI::PositiveNumber);
  random->add_option("--crossings", crossings, "Exact crossing count")->check(CLI::PositiveNumber);
  random->add_option("--max-crossings", max_crossings, "Crossing counts drawn from 1..N")->check(CLI::PositiveNumber);
  random->add_flag("--connected", connected, "Keep only connected diagrams");
  random->add_flag("--colorable", colorable, "Keep only checkerboard-colorable diagrams");
  random->add_flag("--alternating", alternating, "Keep only alternating diagrams");
  random->add_option("--out", out_dir, "Directory for random_NNNN.sld files (default: stdout)");

  auto* suite = app.add_subcommand("suite", "Run the identity sweep over random diagrams");
  suite->add_option("--seed", seed, "Generator seed");
  suite->add_option("--count", count, "Number of diagrams")->check(CLI::PositiveNumber);
  suite->add_option("--max-crossings", max_crossings, "Largest crossing count")->check(CLI::PositiveNumber);
  suite->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (analyze->parsed() || import->parsed()) {
      const Input in = load(input, import->parsed(), orient);
      return print_report(glpair::analyze(in.diagram, in.orientation), json);
    }
    if (certify->parsed()) {
      const Input in = load(input, gauss_input, orient);
      const auto r = glpair::analyze(in.diagram, in.orientation);
      const auto v = verdicts_json(r);
      if (json) {
        std::cout << v.dump(2) << "\n";
      } else {
        for (const auto& [key, value] : v.items()) std::cout << key << ": " << (value.is_null() ? "n/a" : value.dump()) << "\n";
      }
      return r.consistent() ? kOk : kViolation;
    }
    if (random->parsed()) {
      glpair::oracle::RandomDiagramSpec spec;
      spec.min_crossings = crossings > 0 ? crossings : 1;
      spec.max_crossings = crossings > 0 ? crossings : max_crossings;
      spec.seed = seed;
      spec.count = count;
      spec.connected = connected;
      spec.colorable = colorable;
      spec.alternating = alternating;
      return run_random(spec, out_dir);
    }
    if (suite->parsed()) return run_suite(max_crossings, count, seed, json);
  } catch (const glpair::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const glpair::GaussCodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const glpair::DiagramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const glpair::oracle::GenerationExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
