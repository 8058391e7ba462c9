#include "fixtures.hpp"
#include "glpair/oracle.hpp"
#include "glpair/report.hpp"

#include <doctest.h>

using namespace glpair;

TEST_CASE("trefoil report") {
  const auto t = fixtures::trefoil();
  const auto r = analyze(t.diagram, t.orientation);
  CHECK(r.alternating_scan);
  CHECK(r.alternating_by_definiteness == true);
  CHECK(r.minimal_genus_certified == true);
  CHECK(r.black->result.verdict == Definiteness::negative_definite);
  CHECK(r.white->result.verdict == Definiteness::positive_definite);
  CHECK(r.black->sigma == -2);
  CHECK(r.white->sigma == -2);
  CHECK(r.consistent());
}

TEST_CASE("virtual trefoil report has no forms") {
  const auto r = analyze(fixtures::virtual_trefoil().diagram);
  CHECK_FALSE(r.colorable);
  CHECK_FALSE(r.black.has_value());
  CHECK_FALSE(r.alternating_by_definiteness.has_value());
  CHECK_FALSE(r.minimal_genus_certified.has_value());
  const auto j = to_json(r);
  CHECK(j["genus"] == 1);
  CHECK(j["colorable"] == false);
  CHECK(j["forms"].is_null());
}

TEST_CASE("torus link report") {
  const auto doc = fixtures::torus_link();
  const auto r = analyze(doc.diagram, doc.orientation());
  CHECK(r.genus == 1);
  CHECK(r.alternating_scan);
  CHECK(r.alternating_by_definiteness == true);
  CHECK(r.minimal_genus_certified == true);
  CHECK(r.white->sigma - r.black->sigma == 2);
  CHECK(r.consistent());
}

TEST_CASE("switching one trefoil crossing breaks both routes") {
  const auto d = with_crossing_switched(fixtures::trefoil().diagram, 0);
  const auto r = analyze(d);
  CHECK_FALSE(r.alternating_scan);
  CHECK(r.alternating_by_definiteness == false);
  CHECK(r.consistent());
}

TEST_CASE("singular form is not certified") {
  const auto c = fixtures::clasp_pair();
  const auto r = analyze(c.diagram, c.orientation);
  REQUIRE(r.black.has_value());
  CHECK(r.black->result.verdict == Definiteness::singular);
  CHECK(r.minimal_genus_certified == false);
  CHECK(r.consistent());
}

TEST_CASE("genus-0 certificate is the determinant product") {
  oracle::RandomDiagramSpec spec{
      .min_crossings = 1, .max_crossings = 6, .seed = 71, .count = 500, .connected = true, .colorable = true};
  for (const auto& d : oracle::random_diagrams(spec)) {
    if (genus(d) != 0) continue;
    const auto r = analyze(d);
    CHECK(*r.minimal_genus_certified == (r.black->result.determinant * r.white->result.determinant != 0));
  }
}

TEST_CASE("split diagrams are analyzed per piece") {
  const auto r = analyze(fixtures::two_kinks());
  CHECK(r.split);
  CHECK(r.pieces == 2);
  CHECK_FALSE(r.alternating_by_definiteness.has_value());
  CHECK_FALSE(r.minimal_genus_certified.has_value());
  REQUIRE(r.piece_reports.size() == 2);
  for (const auto& p : r.piece_reports) {
    CHECK(p.minimal_genus_certified == true);
    CHECK(p.consistent());
  }
  CHECK(to_json(r)["piece_reports"].size() == 2);

  // Orientation carries over to the pieces.
  const auto hopf_and_kink =
      parse_sld("crossings 3\nedge 0.0 1.1\nedge 0.1 1.0\nedge 0.2 1.3\nedge 0.3 1.2\nedge 2.0 2.1\nedge 2.2 2.3\n")
          .diagram;
  const auto o = parse_orientation(hopf_and_kink, "-++");
  const auto s = analyze(hopf_and_kink, o);
  REQUIRE(s.piece_reports.size() == 2);
  CHECK(s.piece_reports[0].orientation == "-+");
  CHECK(s.piece_reports[0].linking.total == s.linking.total);
}

TEST_CASE("identity suite holds on random diagrams") {
  oracle::RandomDiagramSpec spec{
      .min_crossings = 1, .max_crossings = 8, .seed = 73, .count = 300, .connected = true, .colorable = true};
  for (const auto& d : oracle::random_diagrams(spec)) {
    const auto r = analyze(d);
    for (const auto& id : r.identities) {
      INFO(id.name << ": " << id.detail);
      CHECK(id.holds);
    }
  }
}

TEST_CASE("json is deterministic and ordered") {
  const auto doc = fixtures::torus_link();
  const auto a = to_json(analyze(doc.diagram, doc.orientation())).dump();
  const auto b = to_json(analyze(doc.diagram, doc.orientation())).dump();
  CHECK(a == b);
  const auto j = to_json(analyze(doc.diagram, doc.orientation()));
  CHECK(j.begin().key() == "crossings");
  CHECK(j["forms"]["black"]["verdict"] == "negative-definite");
  CHECK(j["signature_black"] == j["forms"]["black"]["sigma"]);
}

TEST_CASE("text report mentions failures prominently") {
  AnalysisReport r;
  r.identities.push_back({"made_up", false, "1 != 2"});
  CHECK_FALSE(r.consistent());
  CHECK(to_text(r).find("FAIL made_up") != std::string::npos);
}
