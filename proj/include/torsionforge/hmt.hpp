// Linear-size triangulation HMT(n) of the augmented Hadamard disc complex.
//
// Every loop a_j^+ (a_j^-) is the path 0 - v1_j - v2_j - 0 (0 - w1_j - w2_j
// - 0). Disc i runs over the columns in the order of its valid-sequence
// permutation, taking a_j^+ where H(n)_ij = +1 and a_j^- where it is -1.
// Each boundary occurrence of 0 is cut off by a shield triangle, and one
// centre vertex c_i cones over the remaining 2n-gon. Digon j joins a_j^+
// and a_j^- with four fixed triangles. Column 1 of H(n) is all +1, so a_1^-
// and its digon are dropped unless explicitly kept.
#ifndef TORSIONFORGE_HMT_HPP
#define TORSIONFORGE_HMT_HPP

#include "torsionforge/homology.hpp"
#include "torsionforge/simplicial_complex.hpp"
#include "torsionforge/valid_sequences.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace torsionforge {

struct HmtOptions {
  /// Build the unreduced 5n+1 vertex variant with w1_1, w2_1 and digon 1.
  bool keep_first_digon = false;
  /// Check the sequence and run validate_complex on the result. Only the
  /// scaling benchmark turns this off.
  bool validate = true;
};

/// Fixed vertex ids: 0; v1_j, v2_j -> 4(j-1)+1, 4(j-1)+2; w1_j, w2_j ->
/// 4(j-1)+3, 4(j-1)+4, shifted down by two for j >= 2 when the first digon
/// is dropped; then c_1..c_n. Indices 1-based.
class HmtVertexMap {
 public:
  HmtVertexMap(std::size_t n, bool keep_first_digon) : n_(n), keep_(keep_first_digon) {}

  Vertex v(std::size_t j, std::size_t copy) const { return compact(4 * (j - 1) + copy, j); }
  Vertex w(std::size_t j, std::size_t copy) const { return compact(4 * (j - 1) + 2 + copy, j); }
  Vertex c(std::size_t i) const { return static_cast<Vertex>(cycle_vertex_count() + i); }

  std::size_t cycle_vertex_count() const { return keep_ ? 4 * n_ : 4 * n_ - 2; }
  std::size_t vertex_count() const { return 1 + cycle_vertex_count() + n_; }

 private:
  Vertex compact(std::size_t raw, std::size_t j) const {
    return static_cast<Vertex>((!keep_ && j >= 2) ? raw - 2 : raw);
  }

  std::size_t n_;
  bool keep_;
};

/// HMT(n) for n = 2^k >= 2 with the canonical valid sequence.
SimplicialComplex2 build_hmt(std::size_t n, const HmtOptions& options = {});

/// Same construction for any square +-1 matrix and disc ordering. Dropping
/// the first digon requires column 1 to be all +1. The result is validated;
/// an ordering that reuses a shield diagonal is rejected.
SimplicialComplex2 build_hmt(const IntMatrix& h, const ValidSequence& seq,
                             const HmtOptions& options = {});

/// (5n-1, 3n^2+9n-6, 3n^2+4n-4).
FaceVector hmt_face_vector_formula(std::size_t n);

/// Augmented relation matrix of the complex actually built: augment(H(n))
/// without the a_1^- column and digon-1 row unless the digon is kept.
IntMatrix hmt_relation_matrix(std::size_t n, const HmtOptions& options = {});

struct HmtStructureReport {
  std::size_t shield_diagonals = 0;
  std::size_t digon_edges = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Shield diagonals occur in exactly one disc, and no digon edge is a shield
/// diagonal or disc-interior edge.
HmtStructureReport check_hmt_structure(const SimplicialComplex2& k);

struct HmtCertificate {
  std::size_t n = 0;
  bool pass = false;
  FaceVector face_vector;
  FaceVector expected_face_vector;
  long long chi = 0;
  HomologyResult homology;
  BigInt h1_order;
  BigInt expected_h1_order;
  std::vector<PrimePower> expected_h1_primary;
  double elapsed_seconds = 0.0;
  std::vector<std::string> discrepancies;

  std::string to_json() const;
};

/// Builds HMT(n), validates it, computes its homology, and compares
/// everything with the closed forms: H0 = Z, H2 = 0, chi = 1, the face
/// vector formula, H1 = prod_j (Z_{2^j})^C(k,j) of order n^{n/2}.
HmtCertificate hmt_certificate(std::size_t n);

struct ScalingSample {
  std::size_t n = 0;
  double seconds = 0.0;  // best of the timed runs, valid sequence plus complex
  double ratio = 0.0;    // seconds / seconds at n/2; 0 for the first row
};

/// Construction times for n = 2, 4, ..., max_n. Each size is repeated until
/// min_seconds of work has accumulated and the fastest run is kept.
std::vector<ScalingSample> hmt_scaling(std::size_t max_n, double min_seconds = 0.05);

}  // namespace torsionforge

#endif  // TORSIONFORGE_HMT_HPP
