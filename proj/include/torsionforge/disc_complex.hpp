// CW blueprints built from an integer matrix: one vertex, one loop per
// column, one polygonal disc per row whose boundary word realizes the row.
#ifndef TORSIONFORGE_DISC_COMPLEX_HPP
#define TORSIONFORGE_DISC_COMPLEX_HPP

#include "torsionforge/bigint.hpp"
#include "torsionforge/homology.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace torsionforge {

/// One boundary edge of a disc: loop `cycle` (0-based) traversed forwards
/// (+1) or backwards (-1).
struct EdgeLetter {
  std::size_t cycle = 0;
  int orientation = 1;

  bool operator==(const EdgeLetter&) const = default;
};

using EdgeWord = std::vector<EdgeLetter>;

struct DiscComplexSpec {
  std::size_t n_cycles = 0;
  std::vector<EdgeWord> discs;

  /// Validating constructor for arbitrary words: every disc non-empty, every
  /// cycle index in range, orientations +-1.
  static DiscComplexSpec from_words(std::size_t n_cycles, std::vector<EdgeWord> discs);

  /// Row i, column j holds the signed number of times disc i runs over
  /// cycle j.
  IntMatrix relation_matrix() const;

  bool operator==(const DiscComplexSpec&) const = default;
};

enum class WordOrdering {
  grouped,     // all copies of a1, then all of a2, ...
  interleaved  // round-robin over the columns still owed copies
};

WordOrdering parse_ordering(std::string_view name);

/// Throws InputError naming the first zero row or column.
void require_no_zero_lines(const IntMatrix& m);

DiscComplexSpec from_matrix(const IntMatrix& m, WordOrdering ordering);

/// Homology read off the matrix: H0 = Z, H1 = Z^(n-r) + torsion of the
/// Smith form, H2 = Z^(m-r), r the rank of m.
HomologyResult cellular_homology(const IntMatrix& m);

/// {"n_cycles": n, "discs": [[1, -2, ...], ...]}; sign is orientation,
/// magnitude the 1-based cycle.
std::string format_spec_json(const DiscComplexSpec& spec);
DiscComplexSpec parse_spec_json(std::string_view text);

}  // namespace torsionforge

#endif  // TORSIONFORGE_DISC_COMPLEX_HPP
