#ifndef TORSIONFORGE_SPEYER_HPP
#define TORSIONFORGE_SPEYER_HPP

#include "torsionforge/bigint.hpp"
#include "torsionforge/simplicial_complex.hpp"

namespace torsionforge {

/// (m+1) x (m+1) matrix with determinant k, m = floor(log2 k). Row one
/// carries the binary digits of k, most significant first, with signs
/// alternating from +; below it each row has 1 on the diagonal and 2 just
/// to its right.
IntMatrix speyer_matrix(const BigInt& k);

/// Generic triangulation of the grouped disc complex of speyer_matrix(k);
/// at most 9m + 6 vertices.
SimplicialComplex2 build_speyer_complex(const BigInt& k);

}  // namespace torsionforge

#endif  // TORSIONFORGE_SPEYER_HPP
