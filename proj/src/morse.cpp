#include "upq/morse.hpp"

#include <stdexcept>

#include "upq/triple_core.hpp"

namespace upq {

HodgeChain::HodgeChain(std::vector<Int> ranks, std::vector<Int> degrees)
    : ranks_(std::move(ranks)), degrees_(std::move(degrees)) {
  if (ranks_.empty()) throw std::domain_error("Hodge chain must have at least one summand");
  if (ranks_.size() != degrees_.size())
    throw std::domain_error("Hodge chain needs as many degrees as ranks");
  for (Int r : ranks_)
    if (r < 1) throw std::domain_error("Hodge chain ranks must be positive");
}

UkProfile uk_profile(const HodgeChain& c, Int k) {
  UkProfile u;
  const Int m = c.length();
  const auto& r = c.ranks();
  const auto& e = c.degrees();
  for (Int j = 0; j < m; ++j) {
    const Int i = j + k;
    if (i < 0 || i >= m) continue;
    // deg Hom(F_j, F_i) = rk F_j deg F_i - rk F_i deg F_j
    u.rank += r[j] * r[i];
    u.degree += r[j] * e[i] - r[i] * e[j];
  }
  return u;
}

Int dim_h1_weight(const HodgeChain& c, Int k, Int g) {
  require_genus(g);
  if (k < 0) throw std::domain_error("weight index k must be nonnegative");
  const UkProfile even = uk_profile(c, 2 * k);
  const UkProfile odd = uk_profile(c, 2 * k + 1);
  const Int base = (g - 1) * (odd.rank + even.rank) + odd.degree - even.degree;
  return k == 0 ? 1 + base : base;
}

MorseIndex morse_index(const HodgeChain& c, Int g) {
  require_genus(g);
  MorseIndex out;
  for (Int k = 2; k <= c.length() - 1; ++k) {
    const UkProfile u = uk_profile(c, k);
    const Int sign = (k % 2 == 1) ? 1 : -1;  // (-1)^(k+1)
    out.complex_dim += (g - 1) * u.rank + sign * u.degree;
  }
  out.real_index = 2 * out.complex_dim;
  out.negative_advisory = out.complex_dim < 0;
  return out;
}

}  // namespace upq
