// Exact integer matrix kernels: fraction-free determinant and Smith normal
// form, both templated on the scalar type. Instantiate with BigInt unless
// the caller can bound intermediate growth.
#ifndef TORSIONFORGE_EXACTMAT_HPP
#define TORSIONFORGE_EXACTMAT_HPP

#include "torsionforge/bigint.hpp"
#include "torsionforge/errors.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace torsionforge {

/// Determinant by Bareiss fraction-free elimination. Every intermediate
/// division is exact.
template <typename Derived>
typename Derived::Scalar det_bareiss(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw DimensionError("det_bareiss: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
  const Index n = m.rows();
  if (n == 0) return Scalar(1);

  Matrix<Scalar> a = m;
  Scalar prev(1);
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (scalar::is_zero(a(k, k))) {
      Index swap_row = k + 1;
      while (swap_row < n && scalar::is_zero(a(swap_row, k))) ++swap_row;
      if (swap_row == n) return Scalar(0);
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Scalar num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = scalar::exact_quotient(num, prev);
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

struct SnfOptions {
  /// Accumulate the unimodular transforms s and t.
  bool transforms = false;
};

/// m = s * a * t with s, t unimodular and a diagonal with
/// a(0,0) | a(1,1) | ... | a(r-1,r-1), all positive.
template <typename Scalar>
struct SnfResult {
  Matrix<Scalar> a;
  Matrix<Scalar> s;  // empty unless SnfOptions::transforms
  Matrix<Scalar> t;  // empty unless SnfOptions::transforms
  std::vector<Scalar> invariant_factors;

  Index rank() const { return static_cast<Index>(invariant_factors.size()); }
};

/// Row-sparse integer matrix. Each row holds (column, value) pairs with
/// strictly increasing columns and nonzero values.
template <typename Scalar>
struct SparseRows {
  using Entry = std::pair<Index, Scalar>;

  Index rows = 0;
  Index cols = 0;
  std::vector<std::vector<Entry>> data;

  SparseRows() = default;
  SparseRows(Index r, Index c) : rows(r), cols(c), data(static_cast<std::size_t>(r)) {}

  template <typename Derived>
  static SparseRows from_dense(const Eigen::MatrixBase<Derived>& m) {
    SparseRows out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) {
      for (Index j = 0; j < m.cols(); ++j) {
        if (!scalar::is_zero(m(i, j))) out.data[i].emplace_back(j, Scalar(m(i, j)));
      }
    }
    return out;
  }

  Matrix<Scalar> to_dense() const {
    Matrix<Scalar> m = Matrix<Scalar>::Zero(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (const auto& [j, v] : data[i]) m(i, j) = v;
    }
    return m;
  }
};

namespace detail {

// Elimination engine behind smith_normal_form.
//
// Phase one pivots on unit entries while the matrix is held row-sparse,
// visiting the shortest rows first to limit fill-in; a unit pivot needs no
// divisibility repair. Whatever is left has no unit entries and is
// reduced densely with the smallest-magnitude pivot rule.
//
// Working matrix W = L * M * R. We keep s = L^-1 and t = R^-1 directly:
// a row op on W becomes a column op on s, a column op on W a row op on t.
template <typename Scalar>
class SmithEngine {
 public:
  using Entry = typename SparseRows<Scalar>::Entry;

  SmithEngine(SparseRows<Scalar> m, bool track) : m_(std::move(m)), track_(track) {
    if (track_) {
      s_ = Matrix<Scalar>::Identity(m_.rows, m_.rows);
      t_ = Matrix<Scalar>::Identity(m_.cols, m_.cols);
    }
  }

  void run() {
    unit_phase();
    dense_phase();
  }

  const std::vector<Scalar>& factors() const { return factors_; }
  const std::vector<Index>& pivot_rows() const { return pivot_rows_; }
  const std::vector<Index>& pivot_cols() const { return pivot_cols_; }
  Matrix<Scalar>& s() { return s_; }
  Matrix<Scalar>& t() { return t_; }

 private:
  static const Scalar* find_entry(const std::vector<Entry>& row, Index col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const Entry& e, Index c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
  }

  // target -= q * source, merged in column order. Columns new to target are
  // reported through on_fill.
  template <typename OnFill>
  static void axpy_row(std::vector<Entry>& target, const std::vector<Entry>& source,
                       const Scalar& q, OnFill&& on_fill) {
    std::vector<Entry> out;
    out.reserve(target.size() + source.size());
    auto a = target.begin();
    auto b = source.begin();
    while (a != target.end() || b != source.end()) {
      if (b == source.end() || (a != target.end() && a->first < b->first)) {
        out.push_back(std::move(*a));
        ++a;
      } else if (a == target.end() || b->first < a->first) {
        Scalar v = -(q * b->second);
        on_fill(b->first);
        out.emplace_back(b->first, std::move(v));
        ++b;
      } else {
        Scalar v = a->second - q * b->second;
        if (!scalar::is_zero(v)) out.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    target = std::move(out);
  }

  void unit_phase() {
    const auto rows = static_cast<std::size_t>(m_.rows);
    const auto cols = static_cast<std::size_t>(m_.cols);
    row_alive_.assign(rows, true);
    col_alive_.assign(cols, true);
    col_rows_.assign(cols, {});
    for (std::size_t r = 0; r < rows; ++r) {
      for (const auto& e : m_.data[r]) col_rows_[static_cast<std::size_t>(e.first)].push_back(static_cast<Index>(r));
    }

    using Item = std::pair<std::size_t, Index>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!m_.data[r].empty()) queue.emplace(m_.data[r].size(), static_cast<Index>(r));
    }

    std::vector<std::size_t> stamp(rows, 0);
    std::size_t epoch = 0;
    std::vector<Index> touched;

    while (!queue.empty()) {
      auto [len, r] = queue.top();
      queue.pop();
      auto& prow = m_.data[r];
      if (!row_alive_[r] || prow.size() != len || prow.empty()) continue;

      Index pcol = -1;
      std::size_t best = 0;
      for (const auto& [c, v] : prow) {
        if (scalar::abs_value(v) != Scalar(1)) continue;
        std::size_t weight = col_rows_[static_cast<std::size_t>(c)].size();
        if (pcol < 0 || weight < best) {
          pcol = c;
          best = weight;
        }
      }
      if (pcol < 0) continue;

      const Scalar unit = *find_entry(prow, pcol);

      ++epoch;
      touched.clear();
      stamp[r] = epoch;
      for (Index other : col_rows_[static_cast<std::size_t>(pcol)]) {
        if (stamp[other] == epoch || !row_alive_[other]) continue;
        stamp[other] = epoch;
        if (find_entry(m_.data[other], pcol) != nullptr) touched.push_back(other);
      }

      for (Index other : touched) {
        Scalar q = *find_entry(m_.data[other], pcol) * unit;
        axpy_row(m_.data[other], prow, q, [&](Index c) {
          col_rows_[static_cast<std::size_t>(c)].push_back(other);
        });
        if (track_) s_.col(r) += q * s_.col(other);
        if (!m_.data[other].empty()) queue.emplace(m_.data[other].size(), other);
      }

      if (track_) {
        for (const auto& [c, v] : prow) {
          if (c == pcol) continue;
          Scalar q = v * unit;
          t_.row(pcol) += q * t_.row(c);
        }
        if (unit < 0) s_.col(r) = -s_.col(r);
      }

      row_alive_[r] = false;
      col_alive_[pcol] = false;
      prow.clear();
      prow.shrink_to_fit();
      col_rows_[static_cast<std::size_t>(pcol)].clear();
      factors_.emplace_back(1);
      pivot_rows_.push_back(r);
      pivot_cols_.push_back(pcol);
    }
  }

  // Local row i += q * local row j.
  void dense_row_op(Matrix<Scalar>& d, Index i, Index j, const Scalar& q, Index from_col) {
    for (Index c = from_col; c < d.cols(); ++c) {
      if (!scalar::is_zero(d(j, c))) d(i, c) += q * d(j, c);
    }
    if (track_) s_.col(rmap_[j]) -= q * s_.col(rmap_[i]);
  }

  // Local col j += q * local col i.
  void dense_col_op(Matrix<Scalar>& d, Index j, Index i, const Scalar& q, Index from_row) {
    for (Index r = from_row; r < d.rows(); ++r) {
      if (!scalar::is_zero(d(r, i))) d(r, j) += q * d(r, i);
    }
    if (track_) t_.row(cmap_[i]) -= q * t_.row(cmap_[j]);
  }

  // Local swaps only relabel which global row/col a local index refers to.
  void dense_swap_rows(Matrix<Scalar>& d, Index i, Index j) {
    if (i == j) return;
    d.row(i).swap(d.row(j));
    std::swap(rmap_[i], rmap_[j]);
  }
  void dense_swap_cols(Matrix<Scalar>& d, Index i, Index j) {
    if (i == j) return;
    d.col(i).swap(d.col(j));
    std::swap(cmap_[i], cmap_[j]);
  }

  void dense_phase() {
    rmap_.clear();
    cmap_.clear();
    for (Index r = 0; r < m_.rows; ++r) {
      if (row_alive_[r] && !m_.data[r].empty()) rmap_.push_back(r);
    }
    std::vector<Index> local_col(static_cast<std::size_t>(m_.cols), -1);
    for (Index r : rmap_) {
      for (const auto& e : m_.data[r]) local_col[e.first] = 0;
    }
    for (Index c = 0; c < m_.cols; ++c) {
      if (local_col[c] == 0) {
        local_col[c] = static_cast<Index>(cmap_.size());
        cmap_.push_back(c);
      }
    }
    if (rmap_.empty()) return;

    const Index rows = static_cast<Index>(rmap_.size());
    const Index cols = static_cast<Index>(cmap_.size());
    Matrix<Scalar> d = Matrix<Scalar>::Zero(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (auto& e : m_.data[rmap_[i]]) d(i, local_col[e.first]) = std::move(e.second);
      m_.data[rmap_[i]].clear();
    }

    const Index limit = std::min(rows, cols);
    for (Index k = 0; k < limit; ++k) {
      Index pi = -1;
      Index pj = -1;
      Scalar best;
      for (Index i = k; i < rows; ++i) {
        for (Index j = k; j < cols; ++j) {
          if (scalar::is_zero(d(i, j))) continue;
          Scalar mag = scalar::abs_value(d(i, j));
          if (pi < 0 || mag < best) {
            pi = i;
            pj = j;
            best = mag;
          }
        }
      }
      if (pi < 0) break;
      dense_swap_rows(d, k, pi);
      dense_swap_cols(d, k, pj);

      for (;;) {
        bool remainder = false;
        for (Index i = k + 1; i < rows; ++i) {
          if (scalar::is_zero(d(i, k))) continue;
          Scalar q = scalar::quotient(d(i, k), d(k, k));
          if (!scalar::is_zero(q)) dense_row_op(d, i, k, -q, k);
          if (!scalar::is_zero(d(i, k))) remainder = true;
        }
        if (remainder) {
          Index best_i = k;
          for (Index i = k + 1; i < rows; ++i) {
            if (!scalar::is_zero(d(i, k)) &&
                scalar::abs_value(d(i, k)) < scalar::abs_value(d(best_i, k))) {
              best_i = i;
            }
          }
          dense_swap_rows(d, k, best_i);
          continue;
        }

        for (Index j = k + 1; j < cols; ++j) {
          if (scalar::is_zero(d(k, j))) continue;
          Scalar q = scalar::quotient(d(k, j), d(k, k));
          if (!scalar::is_zero(q)) dense_col_op(d, j, k, -q, k);
          if (!scalar::is_zero(d(k, j))) remainder = true;
        }
        if (remainder) {
          Index best_j = k;
          for (Index j = k + 1; j < cols; ++j) {
            if (!scalar::is_zero(d(k, j)) &&
                scalar::abs_value(d(k, j)) < scalar::abs_value(d(k, best_j))) {
              best_j = j;
            }
          }
          dense_swap_cols(d, k, best_j);
          continue;
        }

        // Row and column are clear; the pivot must also divide everything
        // that remains for the diagonal to come out chain-divisible.
        Index bad = -1;
        for (Index i = k + 1; i < rows && bad < 0; ++i) {
          for (Index j = k + 1; j < cols; ++j) {
            if (!scalar::is_zero(d(i, j)) && !scalar::divides(d(k, k), d(i, j))) {
              bad = i;
              break;
            }
          }
        }
        if (bad < 0) break;
        dense_row_op(d, k, bad, Scalar(1), k);
      }

      if (d(k, k) < 0) {
        d(k, k) = -d(k, k);
        if (track_) s_.col(rmap_[k]) = -s_.col(rmap_[k]);
      }
      factors_.push_back(d(k, k));
      pivot_rows_.push_back(rmap_[k]);
      pivot_cols_.push_back(cmap_[k]);
    }
  }

  SparseRows<Scalar> m_;
  bool track_;
  Matrix<Scalar> s_;
  Matrix<Scalar> t_;
  std::vector<bool> row_alive_;
  std::vector<bool> col_alive_;
  std::vector<std::vector<Index>> col_rows_;
  std::vector<Index> rmap_;
  std::vector<Index> cmap_;
  std::vector<Scalar> factors_;
  std::vector<Index> pivot_rows_;
  std::vector<Index> pivot_cols_;
};

// Pivot positions first, in pivot order, then the untouched indices.
inline std::vector<Index> complete_permutation(const std::vector<Index>& pivots, Index size) {
  std::vector<Index> order = pivots;
  std::vector<bool> used(static_cast<std::size_t>(size), false);
  for (Index p : pivots) used[p] = true;
  for (Index i = 0; i < size; ++i) {
    if (!used[i]) order.push_back(i);
  }
  return order;
}

}  // namespace detail

/// Invariant factors (nonzero diagonal of the Smith form) of a sparse matrix.
template <typename Scalar>
std::vector<Scalar> smith_invariant_factors(SparseRows<Scalar> m) {
  detail::SmithEngine<Scalar> engine(std::move(m), false);
  engine.run();
  return engine.factors();
}

/// Smith normal form. The all-zero matrix yields no invariant factors and
/// identity transforms.
template <typename Derived>
SnfResult<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m,
                                                      const SnfOptions& options = {}) {
  using Scalar = typename Derived::Scalar;
  const Index rows = m.rows();
  const Index cols = m.cols();

  detail::SmithEngine<Scalar> engine(SparseRows<Scalar>::from_dense(m), options.transforms);
  engine.run();

  SnfResult<Scalar> result;
  result.invariant_factors = engine.factors();
  result.a = Matrix<Scalar>::Zero(rows, cols);
  for (std::size_t k = 0; k < result.invariant_factors.size(); ++k) {
    result.a(static_cast<Index>(k), static_cast<Index>(k)) = result.invariant_factors[k];
  }
  if (options.transforms) {
    auto row_order = detail::complete_permutation(engine.pivot_rows(), rows);
    auto col_order = detail::complete_permutation(engine.pivot_cols(), cols);
    result.s.resize(rows, rows);
    result.t.resize(cols, cols);
    for (Index k = 0; k < rows; ++k) result.s.col(k) = engine.s().col(row_order[k]);
    for (Index k = 0; k < cols; ++k) result.t.row(k) = engine.t().row(col_order[k]);
  }
  return result;
}

/// A prime power p^e appearing in a primary decomposition.
struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  BigInt value() const;
  bool operator==(const PrimePower&) const = default;
};

/// Finitely generated abelian group Z^free_rank + torsion.
struct AbelianGroup {
  std::size_t free_rank = 0;
  /// Ascending, chain-divisible, every entry > 1.
  std::vector<BigInt> invariant_factors;
  /// Sorted by prime, then exponent.
  std::vector<PrimePower> primary;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  /// Order of the torsion subgroup.
  BigInt torsion_order() const;
  /// Human-readable form such as "Z + Z_2^2 + Z_4"; "0" for the trivial group.
  std::string to_string() const;
  std::string primary_string() const;

  bool operator==(const AbelianGroup&) const = default;
};

/// Canonicalize a list of cyclic orders into an AbelianGroup. The factors
/// need not be chain-divisible; units are dropped.
AbelianGroup group_from_factors(std::span<const BigInt> factors, std::size_t free_rank);

/// Prime factorization as (prime, exponent) pairs, primes ascending. n >= 1.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

}  // namespace torsionforge

#endif  // TORSIONFORGE_EXACTMAT_HPP
