// Valid sequences: one ordering of the column labels per Hadamard-row disc,
// such that every shield diagonal of the triangulated discs is used exactly
// once.
#ifndef TORSIONFORGE_VALID_SEQUENCES_HPP
#define TORSIONFORGE_VALID_SEQUENCES_HPP

#include "torsionforge/bigint.hpp"
#include "torsionforge/errors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torsionforge {

/// perms[i] is the boundary order of disc i+1, as 1-based column labels.
struct ValidSequence {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> perms;

  bool operator==(const ValidSequence&) const = default;
};

/// Two discs whose boundaries share the consecutive label pair at the given
/// positions with identical matrix signs. All indices 1-based.
struct SequenceConflict {
  std::size_t disc1 = 0;
  std::size_t position1 = 0;
  std::size_t disc2 = 0;
  std::size_t position2 = 0;

  bool operator==(const SequenceConflict&) const = default;
};

struct ValidityReport {
  /// Set when some perms[i] is not a permutation of 1..n starting at 1.
  std::optional<std::string> ordering_failure;
  /// Lexicographically first conflicting (disc1, position1, disc2, position2).
  std::optional<SequenceConflict> conflict;

  bool ok() const { return !ordering_failure && !conflict; }
  std::string to_string() const;
};

/// Checks both validity conditions against a square +-1 matrix in O(n^2).
/// Positions wrap: the pair at position n is (perm[n], perm[1]).
ValidityReport check_valid(const ValidSequence& seq, const IntMatrix& m);

/// Doubling step: beta_i = (tau_i ; tau_i + n) for the first n discs and
/// gamma_i (n added at even positions of the first copy, odd positions of
/// the second) for the last n.
ValidSequence extend_sequence(const ValidSequence& seq);

/// Canonical sequence for H(n), n = 2^k, grown from ((1)).
ValidSequence valid_sequence(std::size_t n);

/// One permutation per line, space separated.
std::string format_sequence(const ValidSequence& seq);
ValidSequence parse_sequence(std::string_view text);

}  // namespace torsionforge

#endif  // TORSIONFORGE_VALID_SEQUENCES_HPP
