#include "upq/wall_crossing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace upq {

namespace {

bool admissible_rank_pair(const TripleType& t, Int n1p, Int n2p) {
  return (n1p != 0 || n2p != 0) && n1p * t.n2() != t.n1() * n2p;
}

bool inside(const Rational& a, const WallInterval& iv) {
  const auto lo = a <=> iv.lo;
  if (lo < 0 || (lo == 0 && !iv.include_lo)) return false;
  if (!iv.hi) return true;
  const auto hi = a <=> *iv.hi;
  return hi < 0 || (hi == 0 && iv.include_hi);
}

}  // namespace

Rational wall_alpha(const TripleType& t, const WallWitness& w) {
  const Int denom = w.n1p * t.n2() - t.n1() * w.n2p;
  if (denom == 0) throw std::domain_error("rank pair has no wall (alpha-independent)");
  return Rational::frac(t.rank() * w.dsum - (w.n1p + w.n2p) * t.degree(), denom);
}

std::vector<Wall> enumerate_walls(const TripleType& t, const WallInterval& iv) {
  if (!iv.hi) throw std::domain_error("wall enumeration needs a finite upper bound");
  if (iv.lo > *iv.hi) throw std::domain_error("wall interval has lo > hi");

  std::map<Rational, std::vector<WallWitness>> found;
  const Int n = t.rank();
  const Int d = t.degree();
  for (Int n1p = 0; n1p <= t.n1(); ++n1p) {
    for (Int n2p = 0; n2p <= t.n2(); ++n2p) {
      if (!admissible_rank_pair(t, n1p, n2p)) continue;
      const Int denom = n1p * t.n2() - t.n1() * n2p;
      const Int np = n1p + n2p;
      // alpha = (n d' - np d) / denom is monotone in d', so the preimage of
      // [lo, hi] is the integer interval between these two endpoints.
      Rational e1 = (iv.lo * Rational(denom) + Rational(np * d)) / Rational(n);
      Rational e2 = (*iv.hi * Rational(denom) + Rational(np * d)) / Rational(n);
      if (e1 > e2) std::swap(e1, e2);
      const Int first = ceil(e1).to_int();
      const Int last = floor(e2).to_int();
      for (Int dsum = first; dsum <= last; ++dsum) {
        WallWitness w{n1p, n2p, dsum};
        Rational a = wall_alpha(t, w);
        if (inside(a, iv)) found[a].push_back(w);
      }
    }
  }

  std::vector<Wall> walls;
  walls.reserve(found.size());
  for (auto& [alpha, ws] : found) {
    std::sort(ws.begin(), ws.end());
    walls.push_back({alpha, std::move(ws), false});
  }
  return walls;
}

CriticalCheck is_critical(const TripleType& t, const Rational& alpha) {
  CriticalCheck out;
  for (Int n1p = 0; n1p <= t.n1(); ++n1p) {
    for (Int n2p = 0; n2p <= t.n2(); ++n2p) {
      if (!admissible_rank_pair(t, n1p, n2p)) continue;
      const Int denom = n1p * t.n2() - t.n1() * n2p;
      Rational dsum = (alpha * Rational(denom) + Rational((n1p + n2p) * t.degree())) /
                      Rational(t.rank());
      if (dsum.is_integer()) out.witnesses.push_back({n1p, n2p, dsum.to_int()});
    }
  }
  out.critical = !out.witnesses.empty();
  return out;
}

IntegerGenericity integer_genericity(const TripleType& t, Int m) {
  return {
      .guaranteed_noncritical = gcd(t.rank(), t.degree() - m * t.n1()) == 1,
      .no_alpha_independent = gcd(t.n2(), t.rank(), t.degree()) == 1,
  };
}

Rational stabilization_threshold(const TripleType& t) {
  const AlphaInterval range = alpha_range(t);
  if (t.n1() == t.n2()) return Rational(t.n1() * (t.n1() - 1)) * range.lo;
  if (range.lo >= *range.hi) return range.lo;
  auto walls = enumerate_walls(t, {range.lo, range.hi, false, false});
  return walls.empty() ? range.lo : walls.back().alpha;
}

WallInterval default_wall_interval(const TripleType& t, Int g) {
  const AlphaInterval range = alpha_range(t);
  if (range.hi) return {range.lo, range.hi, false, false};
  require_genus(g);
  Rational cutoff = std::max(stabilization_threshold(t), Rational(2 * g - 2)) + Rational(1);
  return {range.lo, std::max(cutoff, range.lo), false, true};
}

ChamberReport chambers(const TripleType& t, Int g, std::optional<Rational> cutoff) {
  require_genus(g);
  const AlphaInterval range = alpha_range(t);
  ChamberReport rep{.type = t, .g = g, .two_g_minus_2 = Rational(2 * g - 2), .alpha_m = range.lo,
                    .alpha_M = range.hi};
  rep.alpha_L = stabilization_threshold(t);
  const bool equal_ranks = !range.hi.has_value();
  if (equal_ranks) {
    rep.upper = cutoff ? *cutoff : *default_wall_interval(t, g).hi;
  } else {
    rep.upper = *range.hi;
  }
  const Rational& x = rep.two_g_minus_2;
  rep.two_g_minus_2_in_range = x >= range.lo && (equal_ranks || x <= *range.hi);
  rep.two_g_minus_2_at_endpoint = x == range.lo || (!equal_ranks && x == *range.hi);
  rep.range_empty = range.lo.sign() < 0 || range.lo >= rep.upper;
  if (rep.range_empty) return rep;

  // For equal ranks the cutoff itself may be a wall; it is reported but does
  // not split a chamber.
  rep.walls = enumerate_walls(t, {range.lo, rep.upper, false, equal_ranks});
  std::vector<Rational> cuts{range.lo};
  for (auto& w : rep.walls) {
    w.stabilized = equal_ranks && w.alpha > rep.alpha_L;
    if (w.alpha < rep.upper) cuts.push_back(w.alpha);
    if (w.alpha == x) rep.two_g_minus_2_on_wall = true;
    if (rep.two_g_minus_2_in_range && w.alpha >= x && w.alpha <= rep.alpha_L && w.alpha < rep.upper)
      ++rep.walls_to_large_chamber;
  }
  cuts.push_back(rep.upper);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Chamber c{cuts[i], cuts[i + 1]};
    c.contains_2g_minus_2 = c.lo < x && x < c.hi;
    c.is_large_chamber = equal_ranks ? c.lo >= rep.alpha_L : i + 2 == cuts.size();
    rep.chambers.push_back(std::move(c));
  }
  return rep;
}

FlipDims flip_dims(const TripleType& t, const Invariants& sub, Int g) {
  require_genus(g);
  const Invariants quot = t.invariants() - sub;
  if (sub.n1 < 0 || sub.n2 < 0 || quot.n1 < 0 || quot.n2 < 0 || sub.rank() == 0 ||
      quot.rank() == 0)
    throw std::domain_error(
        "(C1) violated: T' and T'' = T - T' need nonnegative ranks and positive total rank");
  const Int denom = sub.n1 * t.n2() - t.n1() * sub.n2;
  if (denom == 0)
    throw std::domain_error(
        "(C2) violated: n2'/(n1'+n2') = n2/(n1+n2), the alpha-slopes never cross");

  FlipDims f{.sub = sub, .quotient = quot};
  f.alpha_c = wall_alpha(t, {sub.n1, sub.n2, sub.degree()});
  const AlphaInterval range = alpha_range(t);
  if (f.alpha_c <= range.lo || (range.hi && f.alpha_c >= *range.hi))
    throw std::domain_error("(C2) violated: the split's wall alpha_c = " + f.alpha_c.str() +
                            " is not inside (alpha_m, alpha_M)");

  f.plus_side = Rational::frac(sub.n2, sub.rank()) < Rational::frac(quot.n2, quot.rank());
  f.dim_moduli = 1 - chi(t.invariants(), t.invariants(), g);
  f.minus_chi_cross = -chi(quot, sub, g);
  f.stilde_dim = 1 - chi(sub, sub, g) - chi(quot, quot, g) - chi(quot, sub, g);
  f.fiber_dim = f.minus_chi_cross - 1;
  f.fiber_nonnegative = f.fiber_dim >= 0;
  f.minus_chi_reverse = -chi(sub, quot, g);
  f.guaranteed_codim = g - 1;
  const Rational x(2 * g - 2);
  f.codim_bound_applies = f.alpha_c > x || (f.alpha_c == x && f.plus_side);
  return f;
}

}  // namespace upq
