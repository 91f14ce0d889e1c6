#pragma once

#include <optional>
#include <vector>

#include "upq/rational.hpp"
#include "upq/triple_core.hpp"

namespace upq {

// A rank pair and degree sum d' = d1' + d2' putting alpha on a wall. The wall
// equation only sees degrees through their sum.
struct WallWitness {
  Int n1p = 0;
  Int n2p = 0;
  Int dsum = 0;

  friend auto operator<=>(const WallWitness&, const WallWitness&) = default;
};

struct Wall {
  Rational alpha;
  std::vector<WallWitness> witnesses;  // sorted
  bool stabilized = false;  // equal ranks, above alpha_L: no geometric flip
};

struct WallInterval {
  Rational lo;
  std::optional<Rational> hi;  // nullopt: unbounded above
  bool include_lo = false;
  bool include_hi = false;
};

// Walls are numerically admissible: every rank pair 0 <= n1' <= n1,
// 0 <= n2' <= n2, (n1',n2') != (0,0), n1' n2 != n1 n2', any integer d'.
// Throws std::domain_error on an unbounded interval or lo > hi.
std::vector<Wall> enumerate_walls(const TripleType& t, const WallInterval& interval);

// Solves the wall equation of (n1', n2', d') for alpha; the rank pair must be
// admissible.
Rational wall_alpha(const TripleType& t, const WallWitness& w);

struct CriticalCheck {
  bool critical = false;
  std::vector<WallWitness> witnesses;
};

CriticalCheck is_critical(const TripleType& t, const Rational& alpha);

struct IntegerGenericity {
  bool guaranteed_noncritical = false;  // GCD(n1+n2, d1+d2 - m n1) == 1
  bool no_alpha_independent = false;    // GCD(n2, n1+n2, d1+d2) == 1
};

IntegerGenericity integer_genericity(const TripleType& t, Int m);

// Largest interior wall in (alpha_m, alpha_M) for n1 != n2; alpha_m when there
// is none. For n1 == n2 the closed form n(n-1)(mu1 - mu2).
Rational stabilization_threshold(const TripleType& t);

// (alpha_m, alpha_M) for n1 != n2; (alpha_m, max(alpha_L, 2g-2) + 1] for equal ranks.
WallInterval default_wall_interval(const TripleType& t, Int g);

struct Chamber {
  Rational lo;
  Rational hi;
  bool contains_2g_minus_2 = false;
  bool is_large_chamber = false;
};

struct ChamberReport {
  TripleType type;
  Int g = 2;
  Rational two_g_minus_2;
  Rational alpha_m;
  std::optional<Rational> alpha_M;
  Rational alpha_L;
  Rational upper;  // alpha_M, or the cutoff for equal ranks
  bool range_empty = false;     // alpha_m < 0 or alpha_m == upper
  bool two_g_minus_2_in_range = false;  // alpha_m <= 2g-2 <= alpha_M
  bool two_g_minus_2_on_wall = false;   // 2g-2 equals an interior wall
  bool two_g_minus_2_at_endpoint = false;
  std::vector<Wall> walls;
  std::vector<Chamber> chambers;
  // Interior walls in [2g-2, alpha_L]: the flips separating the 2g-2 chamber
  // from the large chamber.
  Int walls_to_large_chamber = 0;
};

// For equal ranks, `cutoff` defaults to max(alpha_L, 2g-2) + 1.
ChamberReport chambers(const TripleType& t, Int g, std::optional<Rational> cutoff = std::nullopt);

struct FlipDims {
  Invariants sub;       // T'
  Invariants quotient;  // T'' = T - T'
  Rational alpha_c;
  bool plus_side = false;  // n2'/(n1'+n2') < n2''/(n1''+n2''): locus lives at alpha_c^+
  Int dim_moduli = 0;       // 1 - chi(T,T)
  Int stilde_dim = 0;       // 1 - chi(T',T') - chi(T'',T'') - chi(T'',T')
  Int minus_chi_cross = 0;  // -chi(T'',T'): dimension of Ext^1(T'',T')
  Int fiber_dim = 0;        // -chi(T'',T') - 1
  bool fiber_nonnegative = false;
  Int minus_chi_reverse = 0;  // -chi(T',T''): equals dim_moduli - stilde_dim
  Int guaranteed_codim = 0;   // g - 1
  bool codim_bound_applies = false;  // alpha_c > 2g-2, or == 2g-2 on the plus side
};

// Throws std::domain_error naming the violated condition: (C1) the split must
// have nonnegative ranks on both sides, neither side of total rank zero; (C2)
// the two sides must share an alpha-slope at some alpha_c in (alpha_m, alpha_M).
FlipDims flip_dims(const TripleType& t, const Invariants& sub, Int g);

}  // namespace upq
