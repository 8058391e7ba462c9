#ifndef GLPAIR_ORACLE_HPP
#define GLPAIR_ORACLE_HPP

#include "glpair/diagram.hpp"
#include "glpair/scalar.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace glpair::oracle {

struct RandomDiagramSpec {
  int min_crossings = 1;
  int max_crossings = 1;
  std::uint64_t seed = 0;
  int count = 1;
  bool connected = false;
  bool colorable = false;
  bool alternating = false;
  /// Rejected draws allowed per accepted diagram.
  long attempt_budget = 100000;
};

/// Thrown when the filters reject every draw within the attempt budget.
class GenerationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniformly random perfect matching on the 4c ports of c crossings.
SurfaceDiagram random_matching(int crossings, std::mt19937_64& rng);

bool passes_filters(const SurfaceDiagram& d, const RandomDiagramSpec& spec);

/// Reproducible stream of diagrams. The crossing count of each accepted
/// diagram is uniform in [min_crossings, max_crossings]; filters apply
/// independently.
class RandomDiagrams {
 public:
  explicit RandomDiagrams(RandomDiagramSpec spec);
  SurfaceDiagram next();

 private:
  RandomDiagramSpec spec_;
  std::mt19937_64 rng_;
};

/// First `spec.count` diagrams of the stream.
std::vector<SurfaceDiagram> random_diagrams(const RandomDiagramSpec& spec);

/// Symmetric n x n matrix with entries uniform in [lo, hi].
Eigen::MatrixXi random_symmetric(int n, int lo, int hi, std::mt19937_64& rng);

enum class BruteVerdict {
  empty,
  positive_within_bound,  // every tried vector had a positive value
  negative_within_bound,
  indefinite,             // both signs found
  isotropic,              // a nonzero vector with value 0 exists
};

std::string_view to_string(BruteVerdict v);

/// Evaluates x^T M x over every nonzero integer vector with |x_i| <= bound.
/// A "within bound" verdict is a semi-decision.
BruteVerdict brute_force_definiteness(const Eigen::MatrixXi& m, int bound);

/// Signature from floating-point eigenvalues; magnitudes below
/// 1e-9 * max(1, max |lambda|) count as zero.
int float_signature(const Eigen::MatrixXi& m);

/// Smallest eigenvalue magnitude relative to the largest (1 for n = 0).
double relative_gap(const Eigen::MatrixXi& m);

}  // namespace glpair::oracle

#endif  // GLPAIR_ORACLE_HPP
