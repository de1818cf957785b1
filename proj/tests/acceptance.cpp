// Acceptance run: one PASS/FAIL line per criterion. Criterion 9 is a timing
// report and never affects the exit status.

#include "test_support.hpp"

#include "torsionforge/disc_complex.hpp"
#include "torsionforge/exactmat.hpp"
#include "torsionforge/hadamard.hpp"
#include "torsionforge/hmt.hpp"
#include "torsionforge/homology.hpp"
#include "torsionforge/speyer.hpp"
#include "torsionforge/triangulation.hpp"
#include "torsionforge/valid_sequences.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace tf = torsionforge;

namespace {

// Time budgets in seconds, one per gated criterion.
constexpr double kBudget1 = 1.0;
constexpr double kBudget2 = 300.0;
constexpr double kBudget3 = 60.0;
constexpr double kBudget4 = 10.0;
constexpr double kBudget5 = 1.0;
constexpr double kBudget7 = 30.0;
// Accepted band for the mean doubling ratio of construction time.
constexpr double kRatioLow = 3.0;
constexpr double kRatioHigh = 5.5;
constexpr std::size_t kScalingMaxN = 512;
constexpr int kRandomMatrices = 200;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

bool run(int id, const char* title, double budget, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (out.ok && secs > budget) out.fail("took " + std::to_string(secs) + " s");
  std::printf("[%s] %d %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  return out.ok;
}

tf::BigInt power(unsigned long base, unsigned long exp) {
  tf::BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

tf::ValidSequence expected_sequence(std::vector<std::vector<std::size_t>> perms) {
  tf::ValidSequence s;
  s.n = perms.size();
  s.perms = std::move(perms);
  return s;
}

void check_structure(const tf::SimplicialComplex2& k, const std::string& name, bool hmt, Outcome& out) {
  auto report = tf::validate_complex(k);
  if (!report.ok()) out.fail(name + ": " + report.to_string());
  if (!tf::boundary_composite_vanishes(tf::sparse_boundary_matrices(k))) {
    out.fail(name + ": boundary of boundary is nonzero");
  }
  auto h = tf::simplicial_homology(k);
  if (h.euler_characteristic() != tf::euler_characteristic(k)) out.fail(name + ": Euler-Poincare fails");
  if (hmt && !tf::check_hmt_structure(k).ok()) out.fail(name + ": shield diagonal reused");
}

}  // namespace

int main() {
  bool all = true;

  all &= run(1, "HMT face vectors for n = 2..32", kBudget1, [](Outcome& out) {
    for (std::size_t n = 2; n <= 32; n *= 2) {
      auto f = tf::face_vector(tf::build_hmt(n));
      const tf::FaceVector want{5 * n - 1, 3 * n * n + 9 * n - 6, 3 * n * n + 4 * n - 4};
      if (f != want) out.fail("n = " + std::to_string(n));
    }
  });

  all &= run(2, "HMT homology for n = 2..16", kBudget2, [](Outcome& out) {
    for (std::size_t n = 2, k = 1; n <= 16; n *= 2, ++k) {
      auto h = tf::simplicial_homology(tf::build_hmt(n));
      std::vector<tf::BigInt> primary;
      auto binom = tf::binomial_row(static_cast<unsigned>(k));
      for (std::size_t j = 1; j <= k; ++j)
        for (tf::BigInt c = 0; c < binom[j]; ++c) primary.push_back(power(2, j));
      std::vector<tf::BigInt> got;
      for (const auto& p : h.h1.primary) got.push_back(p.value());
      const std::string tag = "n = " + std::to_string(n);
      if (h.h0.to_string() != "Z") out.fail(tag + ": H0 = " + h.h0.to_string());
      if (!h.h2.is_trivial()) out.fail(tag + ": H2 = " + h.h2.to_string());
      if (h.h1.free_rank != 0 || got != primary) out.fail(tag + ": H1 = " + h.h1.to_string());
      if (h.h1.torsion_order() != power(n, n / 2)) out.fail(tag + ": |H1| = " + h.h1.torsion_order().get_str());
    }
  });

  all &= run(3, "Smith form of H(n) equals the closed form, n = 1..64", kBudget3, [](Outcome& out) {
    for (std::size_t n = 1; n <= 64; n *= 2) {
      if (tf::smith_normal_form(tf::walsh(n)).invariant_factors != tf::hadamard_snf_closed_form(n)) {
        out.fail("n = " + std::to_string(n));
      }
    }
  });

  all &= run(4, "|det H(n)| = n^(n/2) for n = 1..32", kBudget4, [](Outcome& out) {
    for (std::size_t n = 1; n <= 32; n *= 2) {
      if (abs(tf::det_bareiss(tf::walsh(n))) != power(n, n / 2)) out.fail("n = " + std::to_string(n));
    }
  });

  all &= run(5, "K(11) has 29 vertices and H1 = Z_11; det M(k) = k up to 512", kBudget5, [](Outcome& out) {
    auto k = tf::build_speyer_complex(11);
    if (k.vertex_count() != 29) out.fail(std::to_string(k.vertex_count()) + " vertices");
    auto h = tf::simplicial_homology(k);
    if (h.h1.to_string() != "Z_11") out.fail("H1 = " + h.h1.to_string());
    for (long m = 2; m <= 512; ++m) {
      if (tf::det_bareiss(tf::speyer_matrix(m)) != m) out.fail("det M(" + std::to_string(m) + ")");
    }
  });

  all &= run(6, "valid sequences up to n = 256, displayed n = 4 and 8", 1e9, [](Outcome& out) {
    for (std::size_t n = 1; n <= 256; n *= 2) {
      auto report = tf::check_valid(tf::valid_sequence(n), tf::walsh(n));
      if (!report.ok()) out.fail("n = " + std::to_string(n) + ": " + report.to_string());
    }
    if (tf::valid_sequence(4) != expected_sequence({{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 4, 3, 2}, {1, 4, 3, 2}})) {
      out.fail("n = 4 sequence differs");
    }
    auto eight = expected_sequence({{1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5, 6, 7, 8},
                                    {1, 4, 3, 2, 5, 8, 7, 6}, {1, 4, 3, 2, 5, 8, 7, 6},
                                    {1, 6, 3, 8, 5, 2, 7, 4}, {1, 6, 3, 8, 5, 2, 7, 4},
                                    {1, 8, 3, 6, 5, 4, 7, 2}, {1, 8, 3, 6, 5, 4, 7, 2}});
    if (tf::valid_sequence(8) != eight) out.fail("n = 8 sequence differs");
  });

  all &= run(7, "triangulation homology equals cellular homology, 200 random M", kBudget7, [](Outcome& out) {
    auto rng = tftest::make_rng(700);
    for (int trial = 0; trial < kRandomMatrices; ++trial) {
      tf::IntMatrix m = tftest::random_relation_matrix(rng, 4, 3);
      auto expected = tf::cellular_homology(m);
      for (auto ordering : {tf::WordOrdering::grouped, tf::WordOrdering::interleaved}) {
        auto got = tf::simplicial_homology(tf::triangulate_generic(tf::from_matrix(m, ordering)));
        if (got != expected) out.fail("trial " + std::to_string(trial));
      }
    }
  });

  all &= run(8, "structural invariants on every constructed complex", 1e9, [](Outcome& out) {
    for (std::size_t n = 2; n <= 32; n *= 2) {
      check_structure(tf::build_hmt(n), "HMT(" + std::to_string(n) + ")", true, out);
      tf::HmtOptions keep;
      keep.keep_first_digon = true;
      check_structure(tf::build_hmt(n, keep), "HMT+(" + std::to_string(n) + ")", true, out);
    }
    for (long k = 2; k <= 64; ++k) check_structure(tf::build_speyer_complex(k), "K(" + std::to_string(k) + ")", false, out);
    auto rng = tftest::make_rng(800);
    for (int trial = 0; trial < 50; ++trial) {
      tf::IntMatrix m = tftest::random_relation_matrix(rng, 4, 3);
      for (auto ordering : {tf::WordOrdering::grouped, tf::WordOrdering::interleaved}) {
        check_structure(tf::triangulate_generic(tf::from_matrix(m, ordering)), "random " + std::to_string(trial),
                        false, out);
      }
    }
  });

  {
    auto samples = tf::hmt_scaling(kScalingMaxN);
    double sum = 0.0;
    int count = 0;
    for (const auto& s : samples) {
      if (s.ratio > 0) {
        sum += s.ratio;
        ++count;
      }
    }
    const double mean = count ? sum / count : 0.0;
    const bool within = mean >= kRatioLow && mean <= kRatioHigh;
    std::printf("[%s] 9 construction time doubling ratio up to n = %zu: mean %.2f, band [%.1f, %.1f] (report only)\n",
                within ? "PASS" : "FAIL", kScalingMaxN, mean, kRatioLow, kRatioHigh);
    for (const auto& s : samples) std::printf("      n = %4zu  %.6e s  ratio %.2f\n", s.n, s.seconds, s.ratio);
  }

  return all ? 0 : 1;
}
