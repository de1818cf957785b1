// Shared generators and independent oracles for the test binaries.
#ifndef TORSIONFORGE_TEST_SUPPORT_HPP
#define TORSIONFORGE_TEST_SUPPORT_HPP

#include "torsionforge/bigint.hpp"
#include "torsionforge/exactmat.hpp"
#include "torsionforge/simplicial_complex.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace tftest {

using torsionforge::BigInt;
using torsionforge::Index;
using torsionforge::IntMatrix;

inline std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline long long uniform(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, long long lo, long long hi) {
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = BigInt(static_cast<long>(uniform(rng, lo, hi)));
  return m;
}

inline bool has_zero_line(const IntMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j < m.cols(); ++j) zero = zero && m(i, j) == 0;
    if (zero) return true;
  }
  for (Index j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (Index i = 0; i < m.rows(); ++i) zero = zero && m(i, j) == 0;
    if (zero) return true;
  }
  return false;
}

// Rejection sampling until no row or column vanishes.
inline IntMatrix random_relation_matrix(std::mt19937_64& rng, Index max_dim, long long bound) {
  for (;;) {
    const Index rows = uniform(rng, 1, max_dim);
    const Index cols = uniform(rng, 1, max_dim);
    IntMatrix m = random_matrix(rng, rows, cols, -bound, bound);
    if (!has_zero_line(m)) return m;
  }
}

// Product of random elementary operations, so det = +-1.
inline IntMatrix random_unimodular(std::mt19937_64& rng, Index n, int steps) {
  IntMatrix u = IntMatrix::Identity(n, n);
  if (n < 2) {
    if (n == 1 && uniform(rng, 0, 1)) u(0, 0) = -1;
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    const Index i = uniform(rng, 0, n - 1);
    Index j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    switch (uniform(rng, 0, 2)) {
      case 0: u.row(i) += BigInt(static_cast<long>(uniform(rng, -3, 3))) * u.row(j); break;
      case 1: u.row(i).swap(u.row(j)); break;
      default: u.row(i) *= BigInt(-1); break;
    }
  }
  return u;
}

// Textbook Smith reduction on a private copy: move the smallest nonzero
// entry to the corner, clear its row and column by division with remainder,
// repair divisibility, recurse. Deliberately naive and unrelated to the
// library engine.
inline std::vector<BigInt> oracle_invariant_factors(IntMatrix a) {
  std::vector<BigInt> out;
  const Index rows = a.rows();
  const Index cols = a.cols();
  for (Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      Index pi = -1, pj = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) pi = i, pj = j;
      if (pi < 0) return out;
      a.row(t).swap(a.row(pi));
      a.col(t).swap(a.col(pj));
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        BigInt q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        clean = clean && a(i, t) == 0;
      }
      for (Index j = t + 1; j < cols; ++j) {
        BigInt q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        clean = clean && a(t, j) == 0;
      }
      if (!clean) continue;
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      a.row(t) += a.row(bad);
    }
    out.push_back(abs(a(t, t)));
  }
  return out;
}

inline IntMatrix permuted(const IntMatrix& m, const std::vector<Index>& rp, const std::vector<Index>& cp) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(rp[i], cp[j]);
  return out;
}

inline std::vector<Index> random_permutation(std::mt19937_64& rng, Index n) {
  std::vector<Index> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Relabels vertices through a random bijection.
inline torsionforge::SimplicialComplex2 shuffle_vertices(const torsionforge::SimplicialComplex2& k,
                                                         std::mt19937_64& rng) {
  const auto n = static_cast<torsionforge::Vertex>(k.vertex_count());
  std::vector<torsionforge::Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<torsionforge::VertexLabel> labels(n);
  for (torsionforge::Vertex v = 0; v < n; ++v) labels[p[v]] = k.vertices[v];
  std::vector<torsionforge::Triangle> tris;
  for (const auto& t : k.triangles) tris.push_back(torsionforge::make_triangle(p[t[0]], p[t[1]], p[t[2]]));
  return torsionforge::complex_from_triangles(std::move(labels), std::move(tris));
}

// Six-vertex projective plane, ids starting at 1.
inline const char* kRp2Facets =
    "1 2 3\n1 2 6\n1 3 4\n1 4 5\n1 5 6\n2 3 5\n2 4 5\n2 4 6\n3 4 6\n3 5 6\n";

// Ten triangles on six vertices where edge {2,5} has three cofaces; not a
// surface. Its homology is (Z, Z, Z).
inline const char* kTenTriangleFacets =
    "1 2 4\n1 2 5\n1 3 4\n1 3 6\n1 5 6\n2 3 5\n2 3 6\n2 4 5\n3 4 6\n4 5 6\n";

}  // namespace tftest

#endif  // TORSIONFORGE_TEST_SUPPORT_HPP
