#include "torsionforge/disc_complex.hpp"
#include "torsionforge/errors.hpp"
#include "torsionforge/hadamard.hpp"
#include "torsionforge/hmt.hpp"
#include "torsionforge/homology.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace torsionforge;

TEST(Hmt, FaceVectors) {
  EXPECT_EQ(face_vector(build_hmt(2)), (FaceVector{9, 24, 16}));
  EXPECT_EQ(face_vector(build_hmt(4)), (FaceVector{19, 78, 60}));
  for (std::size_t n = 2; n <= 64; n *= 2) {
    EXPECT_EQ(face_vector(build_hmt(n)), hmt_face_vector_formula(n)) << "n = " << n;
    EXPECT_EQ(euler_characteristic(build_hmt(n)), 1);
  }
}

TEST(Hmt, FirstHomologyForSmallOrders) {
  EXPECT_EQ(simplicial_homology(build_hmt(2)).h1.to_string(), "Z_2");
  EXPECT_EQ(simplicial_homology(build_hmt(4)).h1.to_string(), "Z_2^2 + Z_4");
  auto h8 = simplicial_homology(build_hmt(8));
  EXPECT_EQ(h8.h1.to_string(), "Z_2^3 + Z_4^3 + Z_8");
  EXPECT_EQ(h8.h1.torsion_order(), 4096);
}

TEST(Hmt, VertexMapLayout) {
  HmtVertexMap reduced(4, false);
  EXPECT_EQ(reduced.v(1, 1), 1u);
  EXPECT_EQ(reduced.v(1, 2), 2u);
  EXPECT_EQ(reduced.v(2, 1), 3u);
  EXPECT_EQ(reduced.w(2, 2), 6u);
  EXPECT_EQ(reduced.c(1), 15u);
  EXPECT_EQ(reduced.vertex_count(), 19u);
  HmtVertexMap full(4, true);
  EXPECT_EQ(full.w(1, 1), 3u);
  EXPECT_EQ(full.v(2, 1), 5u);
  EXPECT_EQ(full.vertex_count(), 21u);
}

TEST(Hmt, VertexLabelsFollowTheMap) {
  auto k = build_hmt(4);
  EXPECT_EQ(k.vertices[0].to_string(), "0");
  EXPECT_EQ(k.vertices[1].to_string(), "v1_1");
  EXPECT_EQ(k.vertices[3].to_string(), "v1_2");
  EXPECT_EQ(k.vertices[5].to_string(), "w1_2");
  EXPECT_EQ(k.vertices[15].to_string(), "c1_1");
}

TEST(Hmt, StructureChecks) {
  for (std::size_t n = 2; n <= 64; n *= 2) {
    auto k = build_hmt(n);
    auto report = check_hmt_structure(k);
    EXPECT_TRUE(report.ok()) << "n = " << n;
    EXPECT_EQ(report.shield_diagonals, n * n);
    EXPECT_EQ(report.digon_edges, 3 * (n - 1));
  }
}

TEST(Hmt, EdgeCountsBreakDown) {
  // 2n-1 loops of three edges, 3n interior edges per disc, 3 per digon.
  for (std::size_t n = 2; n <= 32; n *= 2) {
    auto k = build_hmt(n);
    std::size_t disc_interior = 0, shields = 0, digon = 0;
    for (const auto& e : k.interior_edges) {
      switch (e.kind) {
        case TaggedEdge::Kind::disc_interior: ++disc_interior; break;
        case TaggedEdge::Kind::shield: ++shields; break;
        case TaggedEdge::Kind::digon: ++digon; break;
      }
    }
    EXPECT_EQ(disc_interior + shields, 3 * n * n);
    EXPECT_EQ(digon, 3 * (n - 1));
    EXPECT_EQ(k.edges.size(), 3 * (2 * n - 1) + 3 * n * n + 3 * (n - 1));
    EXPECT_EQ(k.triangles.size(), 3 * n * n + 4 * (n - 1));
  }
}

TEST(Hmt, AgreesWithCellularHomologyOfRelationMatrix) {
  for (std::size_t n = 2; n <= 8; n *= 2) {
    EXPECT_EQ(simplicial_homology(build_hmt(n)), cellular_homology(hmt_relation_matrix(n))) << "n = " << n;
    HmtOptions keep;
    keep.keep_first_digon = true;
    EXPECT_EQ(simplicial_homology(build_hmt(n, keep)), cellular_homology(hmt_relation_matrix(n, keep)));
  }
}

TEST(Hmt, KeepingTheFirstDigonPreservesHomology) {
  HmtOptions keep;
  keep.keep_first_digon = true;
  for (std::size_t n = 2; n <= 16; n *= 2) {
    auto full = build_hmt(n, keep);
    EXPECT_EQ(full.vertex_count(), 5 * n + 1);
    EXPECT_TRUE(check_hmt_structure(full).ok());
    EXPECT_EQ(simplicial_homology(full), simplicial_homology(build_hmt(n)));
  }
}

TEST(Hmt, RejectsBadOrders) {
  EXPECT_THROW(build_hmt(1), InputError);
  EXPECT_THROW(build_hmt(6), InputError);
  EXPECT_THROW(hmt_certificate(1), InputError);
}

TEST(Hmt, RejectsInvalidSequences) {
  ValidSequence clash;
  clash.n = 4;
  clash.perms.assign(4, {1, 2, 3, 4});
  EXPECT_THROW(build_hmt(walsh(4), clash, {}), ValidationError);
  ValidSequence bad_start = valid_sequence(4);
  std::swap(bad_start.perms[0][0], bad_start.perms[0][1]);
  EXPECT_THROW(build_hmt(walsh(4), bad_start, {}), ValidationError);
}

TEST(Hmt, NegativeFirstColumnNeedsTheFirstDigon) {
  IntMatrix h = walsh(4);
  h.col(0) *= BigInt(-1);
  EXPECT_THROW(build_hmt(h, valid_sequence(4), {}), InputError);
  HmtOptions keep;
  keep.keep_first_digon = true;
  auto k = build_hmt(h, valid_sequence(4), keep);
  EXPECT_EQ(simplicial_homology(k).h1.torsion_order(), 16);
}

TEST(Hmt, CertificatesPass) {
  for (std::size_t n = 2; n <= 16; n *= 2) {
    auto cert = hmt_certificate(n);
    EXPECT_TRUE(cert.pass) << cert.to_json();
  }
  auto cert = hmt_certificate(16);
  EXPECT_EQ(cert.h1_order, BigInt(1) << 32);
}

TEST(Hmt, FacetOutputIsCanonical) {
  auto k = build_hmt(4);
  auto text = format_facets(k);
  EXPECT_EQ(format_facets(parse_facets(text)), text);
}
