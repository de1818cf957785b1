#include "torsionforge/speyer.hpp"

#include "torsionforge/disc_complex.hpp"
#include "torsionforge/errors.hpp"
#include "torsionforge/triangulation.hpp"

namespace torsionforge {

IntMatrix speyer_matrix(const BigInt& k) {
  if (k < 2) throw InputError("speyer_matrix: k = " + k.get_str() + " must be at least 2");
  const auto m = static_cast<Index>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1;
  IntMatrix out = IntMatrix::Zero(m + 1, m + 1);
  for (Index i = 0; i <= m; ++i) {
    const bool bit = mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(m - i)) != 0;
    if (bit) out(0, i) = (i % 2 == 0) ? 1 : -1;
  }
  for (Index r = 1; r <= m; ++r) {
    out(r, r - 1) = 1;
    out(r, r) = 2;
  }
  return out;
}

SimplicialComplex2 build_speyer_complex(const BigInt& k) {
  return triangulate_generic(from_matrix(speyer_matrix(k), WordOrdering::grouped));
}

}  // namespace torsionforge
