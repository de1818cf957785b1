#include "torsionforge/valid_sequences.hpp"

#include "torsionforge/hadamard.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

namespace torsionforge {

namespace {

std::optional<std::string> ordering_problem(const ValidSequence& seq) {
  if (seq.perms.size() != seq.n) {
    return "expected " + std::to_string(seq.n) + " permutations, found " +
           std::to_string(seq.perms.size());
  }
  std::vector<bool> seen(seq.n + 1);
  for (std::size_t i = 0; i < seq.n; ++i) {
    const auto& perm = seq.perms[i];
    const std::string disc = "disc " + std::to_string(i + 1);
    if (perm.size() != seq.n) {
      return disc + " has " + std::to_string(perm.size()) + " labels, expected " +
             std::to_string(seq.n);
    }
    if (perm.front() != 1) return disc + " does not start with 1";
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t label : perm) {
      if (label < 1 || label > seq.n) {
        return disc + " contains label " + std::to_string(label) + " outside 1.." +
               std::to_string(seq.n);
      }
      if (seen[label]) return disc + " repeats label " + std::to_string(label);
      seen[label] = true;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string ValidityReport::to_string() const {
  if (ordering_failure) return "invalid ordering: " + *ordering_failure;
  if (conflict) {
    return "conflict: disc " + std::to_string(conflict->disc1) + " position " +
           std::to_string(conflict->position1) + " and disc " + std::to_string(conflict->disc2) +
           " position " + std::to_string(conflict->position2) +
           " share a consecutive label pair with equal signs";
  }
  return "ok";
}

ValidityReport check_valid(const ValidSequence& seq, const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("check_valid: matrix must be square");
  if (static_cast<std::size_t>(m.rows()) != seq.n) {
    throw DimensionError("check_valid: sequence has n = " + std::to_string(seq.n) +
                         " but matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 1 && m(i, j) != -1) {
        throw InputError("check_valid: entry (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") is not +-1");
      }
    }
  }

  ValidityReport report;
  report.ordering_failure = ordering_problem(seq);
  if (report.ordering_failure) return report;

  const std::size_t n = seq.n;
  // Key of a signed consecutive pair: (label, sign) pairs packed into
  // [0, 2n)^2.
  auto signed_label = [&](std::size_t disc, std::size_t label) -> std::uint64_t {
    bool negative = m(static_cast<Index>(disc), static_cast<Index>(label - 1)) < 0;
    return 2 * (label - 1) + (negative ? 1 : 0);
  };

  struct Occurrence {
    std::size_t disc = 0;
    std::size_t position = 0;
  };
  struct Slot {
    std::optional<Occurrence> first;
    std::optional<Occurrence> other_disc;  // first occurrence in a disc != first->disc
  };
  std::vector<Slot> slots(4 * n * n);
  auto key_at = [&](std::size_t disc, std::size_t pos) {
    const auto& perm = seq.perms[disc];
    std::uint64_t a = signed_label(disc, perm[pos]);
    std::uint64_t b = signed_label(disc, perm[(pos + 1) % n]);
    return static_cast<std::size_t>(a * 2 * n + b);
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Slot& slot = slots[key_at(i, j)];
      if (!slot.first) {
        slot.first = Occurrence{i, j};
      } else if (!slot.other_disc && slot.first->disc != i) {
        slot.other_disc = Occurrence{i, j};
      }
    }
  }

  // Scanning in (disc, position) order, the first occurrence with a partner
  // in another disc fixes (disc1, position1); its earliest partner is the
  // first entry of the slot from a different disc.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Slot& slot = slots[key_at(i, j)];
      std::optional<Occurrence> partner;
      if (slot.first->disc != i) {
        partner = slot.first;
      } else if (slot.other_disc) {
        partner = slot.other_disc;
      }
      if (partner) {
        report.conflict = SequenceConflict{i + 1, j + 1, partner->disc + 1, partner->position + 1};
        return report;
      }
    }
  }
  return report;
}

ValidSequence extend_sequence(const ValidSequence& seq) {
  const std::size_t n = seq.n;
  ValidSequence out;
  out.n = 2 * n;
  out.perms.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& tau = seq.perms[i];
    auto& beta = out.perms[i];
    auto& gamma = out.perms[n + i];
    beta.resize(2 * n);
    gamma.resize(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      beta[j] = tau[j];
      beta[n + j] = tau[j] + n;
      // Positions are 1-based in the construction: even positions are odd
      // 0-based indices.
      const bool even_position = (j % 2) == 1;
      gamma[j] = even_position ? tau[j] + n : tau[j];
      gamma[n + j] = even_position ? tau[j] : tau[j] + n;
    }
  }
  return out;
}

ValidSequence valid_sequence(std::size_t n) {
  require_power_of_two(n, "valid_sequence");
  ValidSequence seq{1, {{1}}};
  while (seq.n < n) seq = extend_sequence(seq);
  return seq;
}

std::string format_sequence(const ValidSequence& seq) {
  std::string out;
  for (const auto& perm : seq.perms) {
    for (std::size_t j = 0; j < perm.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(perm[j]);
    }
    out += '\n';
  }
  return out;
}

ValidSequence parse_sequence(std::string_view text) {
  ValidSequence seq;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::vector<std::size_t> perm;
    std::size_t col = 0;
    while (col < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[col]))) {
        ++col;
        continue;
      }
      std::size_t tok_start = col;
      std::size_t value = 0;
      while (col < line.size() && !std::isspace(static_cast<unsigned char>(line[col]))) {
        if (!std::isdigit(static_cast<unsigned char>(line[col])) || value > (1u << 30)) {
          throw ParseError("expected a positive label", line_no, tok_start + 1);
        }
        value = value * 10 + static_cast<std::size_t>(line[col] - '0');
        ++col;
      }
      perm.push_back(value);
    }
    if (!perm.empty()) seq.perms.push_back(std::move(perm));
    if (end == text.size()) break;
    start = end + 1;
  }
  if (seq.perms.empty()) throw ParseError("empty sequence input", 1, 1);
  seq.n = seq.perms.size();
  return seq;
}

}  // namespace torsionforge
