// Walsh-Hadamard matrices, Sylvester doubling, and the augmented matrix
// with split +/- columns and digon rows.
#ifndef TORSIONFORGE_HADAMARD_HPP
#define TORSIONFORGE_HADAMARD_HPP

#include "torsionforge/bigint.hpp"
#include "torsionforge/errors.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace torsionforge {

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline void require_power_of_two(std::size_t n, const char* where) {
  if (!is_power_of_two(n)) {
    throw InputError(std::string(where) + ": n = " + std::to_string(n) + " is not a power of two");
  }
}

/// True iff every entry is +-1 and the rows are mutually orthogonal.
template <typename Derived>
bool is_hadamard(const Eigen::MatrixBase<Derived>& h) {
  using Scalar = typename Derived::Scalar;
  if (h.rows() != h.cols()) return false;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      if (h(i, j) != Scalar(1) && h(i, j) != Scalar(-1)) return false;
    }
  }
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index k = i + 1; k < h.rows(); ++k) {
      Scalar dot(0);
      for (Eigen::Index j = 0; j < h.cols(); ++j) dot += h(i, j) * h(k, j);
      if (!scalar::is_zero(dot)) return false;
    }
  }
  return true;
}

/// (H H; H -H). Throws ValidationError unless h is Hadamard.
template <typename Derived>
Matrix<typename Derived::Scalar> sylvester_double(const Eigen::MatrixBase<Derived>& h) {
  using Scalar = typename Derived::Scalar;
  if (!is_hadamard(h)) throw ValidationError("sylvester_double: input is not a Hadamard matrix");
  const Eigen::Index n = h.rows();
  Matrix<Scalar> out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h;
  out.topRightCorner(n, n) = h;
  out.bottomLeftCorner(n, n) = h;
  out.bottomRightCorner(n, n) = -h;
  return out;
}

/// Walsh matrix H(n), n = 2^k.
template <typename Scalar = BigInt>
Matrix<Scalar> walsh(std::size_t n) {
  require_power_of_two(n, "walsh");
  const auto size = static_cast<Eigen::Index>(n);
  // H(n)_{ij} = (-1)^{popcount(i & j)} with 0-based indices.
  Matrix<Scalar> h(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      h(i, j) = (__builtin_popcountll(static_cast<unsigned long long>(i & j)) % 2 == 0) ? Scalar(1)
                                                                                       : Scalar(-1);
    }
  }
  return h;
}

/// Smith invariant factors of H(2^k): 2^j repeated C(k, j) times, ascending.
std::vector<BigInt> hadamard_snf_closed_form(std::size_t n);

/// Row k of Pascal's triangle, exact.
std::vector<BigInt> binomial_row(unsigned k);

/// 2n x 2n augmented matrix. Column 2j-1 (1-based) keeps the positive
/// entries of column j, column 2j the magnitudes of its negative entries;
/// row n+j is the digon joining those two columns.
template <typename Derived>
Matrix<typename Derived::Scalar> augment(const Eigen::MatrixBase<Derived>& h) {
  using Scalar = typename Derived::Scalar;
  if (h.rows() != h.cols()) throw DimensionError("augment: matrix must be square");
  const Eigen::Index n = h.rows();
  Matrix<Scalar> out = Matrix<Scalar>::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (h(i, j) == Scalar(1)) {
        out(i, 2 * j) = Scalar(1);
      } else if (h(i, j) == Scalar(-1)) {
        out(i, 2 * j + 1) = Scalar(1);
      } else {
        throw InputError("augment: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") is not +-1");
      }
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    out(n + j, 2 * j) = Scalar(1);
    out(n + j, 2 * j + 1) = Scalar(1);
  }
  return out;
}

}  // namespace torsionforge

#endif  // TORSIONFORGE_HADAMARD_HPP
