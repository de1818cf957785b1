#include "test_support.hpp"

#include "torsionforge/disc_complex.hpp"
#include "torsionforge/errors.hpp"
#include "torsionforge/hmt.hpp"
#include "torsionforge/homology.hpp"
#include "torsionforge/speyer.hpp"
#include "torsionforge/triangulation.hpp"

#include <gtest/gtest.h>

using namespace torsionforge;

namespace {

SimplicialComplex2 plain_complex(std::vector<Triangle> tris, std::size_t vertices) {
  std::vector<VertexLabel> labels;
  for (std::size_t v = 0; v < vertices; ++v) labels.push_back(VertexLabel::plain(v));
  return complex_from_triangles(std::move(labels), std::move(tris));
}

SimplicialComplex2 tetrahedron() { return plain_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 4); }

// Homology from the test oracle applied to the library's boundary matrices.
HomologyResult oracle_homology(const SimplicialComplex2& k) {
  auto d = boundary_matrices(k);
  auto f1 = tftest::oracle_invariant_factors(d.d1);
  auto f2 = tftest::oracle_invariant_factors(d.d2);
  const auto f = face_vector(k);
  HomologyResult h;
  h.h0 = group_from_factors({}, f.f0 - f1.size());
  h.h1 = group_from_factors(f2, f.f1 - f1.size() - f2.size());
  h.h2 = group_from_factors({}, f.f2 - f2.size());
  return h;
}

std::vector<SimplicialComplex2> corpus() {
  std::vector<SimplicialComplex2> out{tetrahedron(), parse_facets(tftest::kRp2Facets),
                                      parse_facets(tftest::kTenTriangleFacets)};
  for (std::size_t n : {2, 4}) out.push_back(build_hmt(n));
  out.push_back(build_speyer_complex(11));
  out.push_back(triangulate_generic(from_matrix(IntMatrix::Constant(1, 2, 2), WordOrdering::interleaved)));
  return out;
}

}  // namespace

TEST(Boundary, SingleTriangleOrientation) {
  auto d = boundary_matrices(plain_complex({{0, 1, 2}}, 3));
  ASSERT_EQ(d.d2.rows(), 1);
  ASSERT_EQ(d.d2.cols(), 3);
  EXPECT_EQ(d.d2(0, 0), 1);
  EXPECT_EQ(d.d2(0, 1), -1);
  EXPECT_EQ(d.d2(0, 2), 1);
  EXPECT_EQ(d.d1.rows(), 3);
  EXPECT_EQ(d.d1(0, 0), -1);
  EXPECT_EQ(d.d1(0, 1), 1);
}

TEST(Boundary, ShapesAndRank) {
  auto tet = boundary_matrices(tetrahedron());
  EXPECT_EQ(smith_normal_form(tet.d2).rank(), 3);
  auto hmt = boundary_matrices(build_hmt(2));
  EXPECT_EQ(hmt.d1.rows(), 24);
  EXPECT_EQ(hmt.d1.cols(), 9);
  EXPECT_EQ(hmt.d2.rows(), 16);
  EXPECT_EQ(hmt.d2.cols(), 24);
}

TEST(Boundary, SquaresToZero) {
  for (const auto& k : corpus()) {
    auto d = boundary_matrices(k);
    IntMatrix dd = d.d2 * d.d1;
    EXPECT_TRUE(dd.isZero(0)) << "complex with " << k.vertex_count() << " vertices";
  }
}

TEST(Boundary, SparseCompositeCheckAgreesWithDenseProduct) {
  for (const auto& k : corpus()) EXPECT_TRUE(boundary_composite_vanishes(sparse_boundary_matrices(k)));
  auto d = sparse_boundary_matrices(tetrahedron());
  d.d2.data[0][1].second = 1;
  EXPECT_FALSE(boundary_composite_vanishes(d));
  EXPECT_FALSE(IntMatrix(d.d2.to_dense() * d.d1.to_dense()).isZero(0));
}

TEST(Homology, Sphere) {
  auto h = simplicial_homology(tetrahedron());
  EXPECT_EQ(h.h0.to_string(), "Z");
  EXPECT_TRUE(h.h1.is_trivial());
  EXPECT_EQ(h.h2.to_string(), "Z");
  EXPECT_EQ(face_vector(tetrahedron()), (FaceVector{4, 6, 4}));
  EXPECT_EQ(euler_characteristic(tetrahedron()), 2);
}

TEST(Homology, MinimalProjectivePlane) {
  auto k = parse_facets(tftest::kRp2Facets);
  auto h = simplicial_homology(k);
  EXPECT_EQ(h, oracle_homology(k));
  EXPECT_EQ(h.h0.to_string(), "Z");
  EXPECT_EQ(h.h1.to_string(), "Z_2");
  EXPECT_TRUE(h.h2.is_trivial());
}

TEST(Homology, NonManifoldTenTriangleComplex) {
  auto k = parse_facets(tftest::kTenTriangleFacets);
  auto h = simplicial_homology(k);
  EXPECT_EQ(h, oracle_homology(k));
  EXPECT_EQ(h.h1.to_string(), "Z");
  EXPECT_EQ(h.h2.to_string(), "Z");
}

TEST(Homology, TwoComponents) {
  auto k = plain_complex({{0, 1, 2}, {3, 4, 5}}, 6);
  EXPECT_EQ(simplicial_homology(k).h0.to_string(), "Z^2");
}

TEST(Homology, AgreesWithOracleOnCorpus) {
  for (const auto& k : corpus()) {
    auto h = simplicial_homology(k);
    EXPECT_EQ(h, oracle_homology(k));
    EXPECT_EQ(h.euler_characteristic(), euler_characteristic(k));
  }
}

TEST(Homology, IndependentOfVertexLabelling) {
  auto rng = tftest::make_rng(41);
  for (const auto& k : corpus()) {
    auto expected = simplicial_homology(k);
    for (int trial = 0; trial < 3; ++trial) {
      auto shuffled = tftest::shuffle_vertices(k, rng);
      EXPECT_EQ(simplicial_homology(shuffled), expected);
      EXPECT_EQ(face_vector(shuffled), face_vector(k));
    }
  }
}

TEST(Validator, DetectsDuplicateTriangle) {
  auto k = tetrahedron();
  k.triangles.push_back(k.triangles.front());
  auto report = validate_complex(k);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.to_string().find("duplicate"), std::string::npos) << report.to_string();
  EXPECT_THROW(simplicial_homology(k), ValidationError);
}

TEST(Validator, DetectsMissingEdge) {
  auto k = tetrahedron();
  k.edges.erase(k.edges.begin());
  auto report = validate_complex(k);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.to_string().find("closure"), std::string::npos) << report.to_string();
}

TEST(Validator, DetectsDegenerateAndIsolatedSimplices) {
  auto k = tetrahedron();
  k.triangles.push_back({1, 1, 2});
  EXPECT_FALSE(validate_complex(k).ok());
  auto lonely = tetrahedron();
  lonely.vertices.push_back(VertexLabel::plain(4));
  EXPECT_FALSE(validate_complex(lonely).ok());
}

TEST(Validator, ConstructedComplexesPass) {
  for (const auto& k : corpus()) EXPECT_TRUE(validate_complex(k).ok()) << validate_complex(k).to_string();
}

TEST(HomologyResult, JsonCarriesDecimalStrings) {
  auto json = simplicial_homology(build_hmt(4)).to_json();
  EXPECT_NE(json.find("\"invariant_factors\""), std::string::npos);
  EXPECT_NE(json.find("\"4\""), std::string::npos);
}
