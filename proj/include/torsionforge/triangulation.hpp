// Generic triangulation of a disc-complex blueprint.
//
// Vertex 0 is the CW vertex. Loop j becomes the path 0 - v1_j - v2_j - 0.
// A disc with s boundary letters has 3s boundary slots; an inner polygon
// of L = ceil(3s/2) private vertices c_1..c_L sits inside it. c_k cones
// over boundary slots 2k-2, 2k-1, 2k (cyclically, the last cone may reach
// only two), consecutive cones share the slot between them, and the inner
// polygon is fanned from c_1.
#ifndef TORSIONFORGE_TRIANGULATION_HPP
#define TORSIONFORGE_TRIANGULATION_HPP

#include "torsionforge/disc_complex.hpp"
#include "torsionforge/simplicial_complex.hpp"

#include <cstddef>

namespace torsionforge {

/// Throws ValidationError if a disc uses one cycle in both orientations.
SimplicialComplex2 triangulate_generic(const DiscComplexSpec& spec);

/// 1 + 2n + sum_i ceil(3 s_i / 2).
std::size_t generic_vertex_count(const DiscComplexSpec& spec);

/// 2n + m + 1 + (3/2) sum |M_ij|, rounded down; an upper bound on
/// generic_vertex_count for any spec realizing M.
std::size_t generic_vertex_bound(const DiscComplexSpec& spec);

}  // namespace torsionforge

#endif  // TORSIONFORGE_TRIANGULATION_HPP
