// Integer simplicial homology of 2-complexes through Smith normal forms of
// the boundary maps.
#ifndef TORSIONFORGE_HOMOLOGY_HPP
#define TORSIONFORGE_HOMOLOGY_HPP

#include "torsionforge/exactmat.hpp"
#include "torsionforge/simplicial_complex.hpp"

#include <string>

namespace torsionforge {

struct HomologyResult {
  AbelianGroup h0;
  AbelianGroup h1;
  AbelianGroup h2;

  bool operator==(const HomologyResult&) const = default;
  /// Free-rank alternating sum; equals f0 - f1 + f2 for a finite complex.
  long long euler_characteristic() const;
  std::string to_string() const;
  /// {"h0": {...}, "h1": {...}, "h2": {...}} with free_rank,
  /// invariant_factors (decimal strings) and primary per degree.
  std::string to_json() const;
};

/// d1 is edges x vertices, d2 triangles x edges, both as row-sparse maps
/// with rows in the complex's sorted simplex order. Orientation follows
/// ascending vertex ids: d(ab) = b - a, d(abc) = bc - ac + ab.
struct SparseBoundaries {
  SparseRows<BigInt> d1;
  SparseRows<BigInt> d2;
};
SparseBoundaries sparse_boundary_matrices(const SimplicialComplex2& k);

/// True when every row of d2 * d1 vanishes, computed row by row on the
/// sparse form.
bool boundary_composite_vanishes(const SparseBoundaries& d);

struct BoundaryMatrices {
  IntMatrix d1;
  IntMatrix d2;
};
/// Dense boundary matrices; throws ValidationError for an invalid complex.
BoundaryMatrices boundary_matrices(const SimplicialComplex2& k);

/// Throws ValidationError for an invalid complex. The two Smith reductions
/// run concurrently.
HomologyResult simplicial_homology(const SimplicialComplex2& k);

}  // namespace torsionforge

#endif  // TORSIONFORGE_HOMOLOGY_HPP
