#include "glpair/oracle.hpp"
#include "glpair/sld_format.hpp"
#include "glpair/symmetric_form.hpp"

#include <doctest.h>

#include <set>

using namespace glpair;
using namespace glpair::oracle;

TEST_CASE("generation is reproducible per seed") {
  RandomDiagramSpec spec{.min_crossings = 4, .max_crossings = 4, .seed = 7, .count = 50, .connected = true};
  CHECK(random_diagrams(spec) == random_diagrams(spec));
  auto other = spec;
  other.seed = 8;
  CHECK(random_diagrams(spec) != random_diagrams(other));
}

TEST_CASE("one crossing: every port matching appears") {
  RandomDiagramSpec spec{.min_crossings = 1, .max_crossings = 1, .seed = 1, .count = 200};
  std::set<std::string> seen;
  for (const auto& d : random_diagrams(spec)) seen.insert(serialize_sld(d));
  // {01,23}, {02,13}, {03,12}
  CHECK(seen.size() == 3);
}

TEST_CASE("filters hold and round trip through the parser") {
  RandomDiagramSpec spec{.min_crossings = 1,
                         .max_crossings = 8,
                         .seed = 13,
                         .count = 200,
                         .connected = true,
                         .colorable = true,
                         .alternating = true};
  for (const auto& d : random_diagrams(spec)) {
    CHECK_FALSE(is_split(d));
    CHECK(is_alternating_scan(d));
    CHECK_FALSE(checkerboard_colorings(d, trace_faces(d)).empty());
    CHECK(parse_sld(serialize_sld(d)).diagram == d);
  }
}

TEST_CASE("starved filters raise exhaustion") {
  // With a budget of one draw, most seeds fail the alternating filter at
  // eight crossings.
  RandomDiagramSpec spec{.min_crossings = 8, .max_crossings = 8, .seed = 1, .count = 1, .alternating = true,
                         .attempt_budget = 1};
  bool thrown = false;
  for (int i = 0; i < 50 && !thrown; ++i) {
    spec.seed = i;
    try {
      random_diagrams(spec);
    } catch (const GenerationExhausted&) {
      thrown = true;
    }
  }
  CHECK(thrown);
  CHECK_THROWS_AS(RandomDiagrams(RandomDiagramSpec{.min_crossings = 0}), std::invalid_argument);
}

TEST_CASE("brute force definiteness examples") {
  Eigen::MatrixXi a(2, 2);
  a << -2, 1, 1, -2;
  CHECK(brute_force_definiteness(a, 2) == BruteVerdict::negative_within_bound);
  Eigen::MatrixXi b(2, 2);
  b << 2, 0, 0, -3;
  CHECK(brute_force_definiteness(b, 1) == BruteVerdict::indefinite);
  CHECK(brute_force_definiteness(Eigen::MatrixXi::Constant(1, 1, 1), 3) == BruteVerdict::positive_within_bound);
  CHECK(brute_force_definiteness(Eigen::MatrixXi::Zero(2, 2), 1) == BruteVerdict::isotropic);
  CHECK(brute_force_definiteness(Eigen::MatrixXi(0, 0), 1) == BruteVerdict::empty);
}

TEST_CASE("float signature examples") {
  Eigen::MatrixXi a(2, 2);
  a << -2, 1, 1, -2;
  CHECK(float_signature(a) == -2);
  CHECK(float_signature(Eigen::MatrixXi::Zero(3, 3)) == 0);
  CHECK(float_signature(Eigen::MatrixXi(0, 0)) == 0);
}

TEST_CASE("random symmetric matrices stay in range") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 12; ++n) {
    const auto m = random_symmetric(n, -10, 10, rng);
    CHECK(m == m.transpose());
    CHECK(m.maxCoeff() <= 10);
    CHECK(m.minCoeff() >= -10);
  }
}
