#include "glpair/oracle.hpp"

#include "glpair/coloring.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace glpair::oracle {

SurfaceDiagram random_matching(int crossings, std::mt19937_64& rng) {
  std::vector<Dart> ports(4 * crossings);
  std::iota(ports.begin(), ports.end(), 0);
  std::shuffle(ports.begin(), ports.end(), rng);
  std::vector<Dart> partner(ports.size());
  for (std::size_t i = 0; i < ports.size(); i += 2) {
    partner[ports[i]] = ports[i + 1];
    partner[ports[i + 1]] = ports[i];
  }
  return SurfaceDiagram(std::move(partner));
}

bool passes_filters(const SurfaceDiagram& d, const RandomDiagramSpec& spec) {
  if (spec.connected && is_split(d)) return false;
  if (spec.alternating && !is_alternating_scan(d)) return false;
  if (spec.colorable && checkerboard_colorings(d, trace_faces(d)).empty()) return false;
  return true;
}

RandomDiagrams::RandomDiagrams(RandomDiagramSpec spec) : spec_(spec), rng_(spec.seed) {
  if (spec_.min_crossings < 1 || spec_.max_crossings < spec_.min_crossings)
    throw std::invalid_argument("crossing range must satisfy 1 <= min <= max");
}

SurfaceDiagram RandomDiagrams::next() {
  // Fix the size before rejecting, so accepted sizes stay uniform even when
  // the filters favor small diagrams.
  const int c = std::uniform_int_distribution<int>(spec_.min_crossings, spec_.max_crossings)(rng_);
  for (long attempt = 0; attempt < spec_.attempt_budget; ++attempt) {
    SurfaceDiagram d = random_matching(c, rng_);
    if (passes_filters(d, spec_)) return d;
  }
  throw GenerationExhausted("no diagram passed the filters in " + std::to_string(spec_.attempt_budget) +
                            " attempts");
}

std::vector<SurfaceDiagram> random_diagrams(const RandomDiagramSpec& spec) {
  RandomDiagrams stream(spec);
  std::vector<SurfaceDiagram> out;
  out.reserve(spec.count);
  for (int i = 0; i < spec.count; ++i) out.push_back(stream.next());
  return out;
}

Eigen::MatrixXi random_symmetric(int n, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(lo, hi);
  Eigen::MatrixXi m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
  return m;
}

std::string_view to_string(BruteVerdict v) {
  switch (v) {
    case BruteVerdict::empty: return "empty";
    case BruteVerdict::positive_within_bound: return "positive-within-bound";
    case BruteVerdict::negative_within_bound: return "negative-within-bound";
    case BruteVerdict::indefinite: return "indefinite";
    case BruteVerdict::isotropic: return "isotropic";
  }
  return "unknown";
}

BruteVerdict brute_force_definiteness(const Eigen::MatrixXi& m, int bound) {
  const Eigen::Index n = m.rows();
  if (n == 0) return BruteVerdict::empty;
  const Eigen::MatrixXd md = m.cast<double>();
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, -bound);
  bool positive = false, negative = false, zero = false;
  // Odometer over {-bound..bound}^n; the values are small integers, so the
  // double evaluation is exact.
  while (true) {
    if (!x.isZero()) {
      const double q = x.dot(md * x);
      if (q > 0) positive = true;
      else if (q < 0) negative = true;
      else zero = true;
    }
    Eigen::Index i = 0;
    while (i < n && x[i] == bound) x[i++] = -bound;
    if (i == n) break;
    x[i] += 1;
  }
  if (positive && negative) return BruteVerdict::indefinite;
  if (zero) return BruteVerdict::isotropic;
  return positive ? BruteVerdict::positive_within_bound : BruteVerdict::negative_within_bound;
}

namespace {

Eigen::VectorXd eigenvalues(const Eigen::MatrixXi& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.cast<double>(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

int float_signature(const Eigen::MatrixXi& m) {
  if (m.rows() == 0) return 0;
  const Eigen::VectorXd ev = eigenvalues(m);
  const double tol = 1e-9 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  int s = 0;
  for (double v : ev) s += v > tol ? 1 : v < -tol ? -1 : 0;
  return s;
}

double relative_gap(const Eigen::MatrixXi& m) {
  if (m.rows() == 0) return 1.0;
  const Eigen::VectorXd ev = eigenvalues(m).cwiseAbs();
  return ev.minCoeff() / std::max(1.0, ev.maxCoeff());
}

}  // namespace glpair::oracle
