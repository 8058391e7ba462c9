#ifndef GLPAIR_SCALAR_HPP
#define GLPAIR_SCALAR_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>

// Exact scalars for Eigen. GMP classes are non-trivial and have no
// meaningful epsilon, so every tolerance reported to Eigen is zero.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace glpair {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Sign of an exact scalar as -1, 0 or +1.
inline int sign_of(const Integer& v) { return sgn(v); }
inline int sign_of(const Rational& v) { return sgn(v); }

/// Value as int64 when it fits.
inline std::optional<std::int64_t> to_int64(const Integer& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace glpair

#endif  // GLPAIR_SCALAR_HPP
