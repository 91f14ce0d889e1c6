#include "upq/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "upq/higgs_bridge.hpp"

namespace upq {

namespace {

void require_pq(Int p, Int q, Int g) {
  if (p < 1 || q < 1) throw std::domain_error("ranks p, q must be positive");
  require_genus(g);
}

}  // namespace

bool omega_membership(Int p, Int q, Int g, Int a, Int b) {
  require_pq(p, q, g);
  const Int bound = (p + q) * std::min(p, q) * (g - 1);
  const Int line = a * q - b * p;
  if (line > bound || line < -bound) return false;
  const bool vertical = 0 <= a && a <= p && b <= q;
  const bool horizontal = 0 <= b && b <= q && a <= p;
  if (!vertical && !horizontal) return false;
  if (a == p && b <= q) return false;
  if (b == q && a <= p) return false;
  return true;
}

ClassPair canonicalize(Int p, Int q, Int g, Int a, Int b) {
  require_pq(p, q, g);
  const Toledo t = toledo(HiggsType(p, q, a, b, g));
  if (!t.within_bound)
    throw std::domain_error("|tau(" + std::to_string(a) + "," + std::to_string(b) +
                            ")| = " + abs(t.tau).str() + " exceeds tau_M = " + t.tau_M.str() +
                            ": the class is not a component label");
  // The region forces 0 <= a' <= p or 0 <= b' <= q, which leaves at most four
  // shifts l to try.
  std::vector<Int> shifts;
  for (Int l = ceil_div(-a, p); l <= floor_div(p - a, p); ++l) shifts.push_back(l);
  for (Int l = ceil_div(-b, q); l <= floor_div(q - b, q); ++l) shifts.push_back(l);
  for (Int l : shifts) {
    const Int ca = a + l * p;
    const Int cb = b + l * q;
    if (omega_membership(p, q, g, ca, cb)) return {ca, cb, true};
  }
  throw std::logic_error("no fundamental-region representative found");
}

CensusReport enumerate_region(Int p, Int q, Int g) {
  require_pq(p, q, g);
  CensusReport rep{.p = p, .q = q, .g = g, .k = gcd(p, q)};
  const Int n = p + q;
  rep.expected_count = 2 * n * std::min(p, q) * (g - 1) + rep.k;
  const Int low = -n * (g - 1);
  const Int high = std::max(p, q);
  for (Int a = low; a <= high; ++a) {
    for (Int b = low; b <= high; ++b) {
      if (!omega_membership(p, q, g, a, b)) continue;
      ClassPair c{a, b, true};
      rep.points.push_back(c);
      if (gcd(n, a + b) == 1) rep.coprime_points.push_back(c);
      rep.lines[(a * q - b * p) / rep.k].push_back(c);
    }
  }
  rep.count = static_cast<Int>(rep.points.size());
  return rep;
}

TauQuotientFacts tau_quotient_facts(Int p, Int q) {
  if (p < 1 || q < 1) throw std::domain_error("ranks p, q must be positive");
  const Int k = gcd(p, q);
  return {.k = k,
          .image_lattice_step = Rational::frac(2 * k, p + q),
          .kernel_size = k,
          .generator_a = p / k,
          .generator_b = q / k};
}

CoprimePartition coprime_partition(Int p, Int q, Int g) {
  const CensusReport rep = enumerate_region(p, q, g);
  CoprimePartition out;
  for (const auto& c : rep.points) {
    (gcd(p + q, c.a + c.b) == 1 ? out.coprime : out.non_coprime).push_back(c);
  }
  out.both_nonempty = !out.coprime.empty() && !out.non_coprime.empty();
  return out;
}

}  // namespace upq
