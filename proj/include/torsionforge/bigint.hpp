// Arbitrary-precision integer scalar and its Eigen integration.
#ifndef TORSIONFORGE_BIGINT_HPP
#define TORSIONFORGE_BIGINT_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <type_traits>

namespace torsionforge {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace torsionforge

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace torsionforge {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense matrix of arbitrary-precision integers.
using IntMatrix = Matrix<BigInt>;
using Index = Eigen::Index;

// Scalar helpers so kernels can be instantiated for both BigInt and
// machine integers.
namespace scalar {

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline int sign(const BigInt& x) { return sgn(x); }
inline BigInt abs_value(const BigInt& x) { return abs(x); }
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return gcd(a, b); }
// Truncated quotient.
inline BigInt quotient(const BigInt& a, const BigInt& b) { return a / b; }
inline bool divides(const BigInt& d, const BigInt& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}
// Requires d | x.
inline BigInt exact_quotient(const BigInt& x, const BigInt& d) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

template <typename I>
  requires std::is_integral_v<I>
bool is_zero(I x) {
  return x == 0;
}
template <typename I>
  requires std::is_integral_v<I>
int sign(I x) {
  return (x > 0) - (x < 0);
}
template <typename I>
  requires std::is_integral_v<I>
I abs_value(I x) {
  return x < 0 ? -x : x;
}
template <typename I>
  requires std::is_integral_v<I>
I gcd_of(I a, I b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    I r = a % b;
    a = b;
    b = r;
  }
  return a;
}
template <typename I>
  requires std::is_integral_v<I>
I quotient(I a, I b) {
  return a / b;
}
template <typename I>
  requires std::is_integral_v<I>
bool divides(I d, I x) {
  return d == 0 ? x == 0 : x % d == 0;
}
template <typename I>
  requires std::is_integral_v<I>
I exact_quotient(I x, I d) {
  return x / d;
}

}  // namespace scalar

}  // namespace torsionforge

#endif  // TORSIONFORGE_BIGINT_HPP
