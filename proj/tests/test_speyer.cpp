#include "torsionforge/errors.hpp"
#include "torsionforge/exactmat.hpp"
#include "torsionforge/homology.hpp"
#include "torsionforge/speyer.hpp"

#include <gtest/gtest.h>

using namespace torsionforge;

TEST(Speyer, ElevenMatrix) {
  IntMatrix expected(4, 4);
  expected << 1, 0, 1, -1,
              1, 2, 0, 0,
              0, 1, 2, 0,
              0, 0, 1, 2;
  EXPECT_EQ(speyer_matrix(11), expected);
}

TEST(Speyer, SmallMatrices) {
  IntMatrix two(2, 2), three(2, 2);
  two << 1, 0, 1, 2;
  three << 1, -1, 1, 2;
  EXPECT_EQ(speyer_matrix(2), two);
  EXPECT_EQ(speyer_matrix(3), three);
  EXPECT_THROW(speyer_matrix(1), InputError);
}

TEST(Speyer, DeterminantIsK) {
  for (long k = 2; k <= 512; ++k) EXPECT_EQ(det_bareiss(speyer_matrix(k)), k) << "k = " << k;
}

TEST(Speyer, DeterminantIsKForHugeK) {
  BigInt k("170141183460469231731687303715884105727");
  EXPECT_EQ(det_bareiss(speyer_matrix(k)), k);
}

TEST(Speyer, ElevenComplex) {
  auto k = build_speyer_complex(11);
  EXPECT_EQ(k.vertex_count(), 29u);
  auto h = simplicial_homology(k);
  EXPECT_EQ(h.h0.to_string(), "Z");
  EXPECT_EQ(h.h1.to_string(), "Z_11");
  EXPECT_TRUE(h.h2.is_trivial());
}

TEST(Speyer, TorsionOrderIsK) {
  for (long k = 2; k <= 64; ++k) {
    auto h = simplicial_homology(build_speyer_complex(k));
    EXPECT_EQ(h.h1.free_rank, 0u);
    EXPECT_EQ(h.h1.torsion_order(), k) << "k = " << k;
    if (mpz_probab_prime_p(BigInt(k).get_mpz_t(), 30)) {
      EXPECT_EQ(h.h1.invariant_factors, (std::vector<BigInt>{k})) << "k = " << k;
    }
  }
}

TEST(Speyer, PowerOfTwoStaysSmall) {
  auto k = build_speyer_complex(1024);
  EXPECT_LE(k.vertex_count(), 96u);
  EXPECT_EQ(simplicial_homology(k).h1.torsion_order(), 1024);
}
