#include "torsionforge/exactmat.hpp"

#include <algorithm>
#include <map>

namespace torsionforge {

namespace {

constexpr unsigned long kTrialBound = 10000;

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

// Pollard-Brent rho. n is odd, composite, without small factors.
BigInt find_divisor(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2;
    BigInt x;
    BigInt q = 1;
    BigInt g = 1;
    BigInt ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](const BigInt& v) {
      BigInt w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = q * abs(BigInt(x - y));
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(BigInt(abs(BigInt(x - ys))), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = find_divisor(n);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  if (n < 1) throw InputError("factorize: expected a positive integer, got " + n.get_str());
  std::map<BigInt, unsigned> found;
  BigInt rest = n;
  for (unsigned long p = 2; p <= kTrialBound && rest > 1; ++p) {
    if (p > 2 && p % 2 == 0) continue;
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      ++found[BigInt(p)];
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  factor_into(rest, found);
  return {found.begin(), found.end()};
}

BigInt PrimePower::value() const {
  BigInt v;
  mpz_pow_ui(v.get_mpz_t(), prime.get_mpz_t(), exponent);
  return v;
}

BigInt AbelianGroup::torsion_order() const {
  BigInt order = 1;
  for (const auto& f : invariant_factors) order *= f;
  return order;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  auto append = [&](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (std::size_t i = 0; i < invariant_factors.size();) {
    std::size_t j = i;
    while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
    std::string term = "Z_" + invariant_factors[i].get_str();
    if (j - i > 1) term += "^" + std::to_string(j - i);
    append(term);
    i = j;
  }
  return out;
}

std::string AbelianGroup::primary_string() const {
  if (primary.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < primary.size();) {
    std::size_t j = i;
    while (j < primary.size() && primary[j] == primary[i]) ++j;
    if (!out.empty()) out += " + ";
    out += "Z_" + primary[i].value().get_str();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

AbelianGroup group_from_factors(std::span<const BigInt> factors, std::size_t free_rank) {
  AbelianGroup g;
  g.free_rank = free_rank;

  std::map<BigInt, std::vector<unsigned>> by_prime;
  for (const auto& f : factors) {
    if (f <= 0) throw InputError("group_from_factors: factor " + f.get_str() + " is not positive");
    for (const auto& [p, e] : factorize(f)) {
      by_prime[p].push_back(e);
      g.primary.push_back({p, e});
    }
  }
  std::sort(g.primary.begin(), g.primary.end(), [](const PrimePower& a, const PrimePower& b) {
    return a.prime != b.prime ? a.prime < b.prime : a.exponent < b.exponent;
  });

  // The i-th largest invariant factor collects the i-th largest power of
  // every prime.
  std::size_t count = 0;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    count = std::max(count, exps.size());
  }
  g.invariant_factors.assign(count, BigInt(1));
  for (const auto& [p, exps] : by_prime) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      BigInt pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), exps[i]);
      g.invariant_factors[count - 1 - i] *= pe;
    }
  }
  return g;
}

}  // namespace torsionforge
