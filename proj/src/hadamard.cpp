#include "torsionforge/hadamard.hpp"

#include <bit>

namespace torsionforge {

std::vector<BigInt> binomial_row(unsigned k) {
  std::vector<BigInt> row{BigInt(1)};
  for (unsigned level = 1; level <= k; ++level) {
    std::vector<BigInt> next(level + 1, BigInt(1));
    for (unsigned j = 1; j < level; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row;
}

std::vector<BigInt> hadamard_snf_closed_form(std::size_t n) {
  require_power_of_two(n, "hadamard_snf_closed_form");
  const auto k = static_cast<unsigned>(std::countr_zero(n));
  const auto binom = binomial_row(k);
  std::vector<BigInt> factors;
  factors.reserve(n);
  for (unsigned j = 0; j <= k; ++j) {
    BigInt power = BigInt(1) << j;
    for (BigInt c = 0; c < binom[j]; ++c) factors.push_back(power);
  }
  return factors;
}

}  // namespace torsionforge
