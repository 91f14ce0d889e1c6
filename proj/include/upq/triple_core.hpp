#pragma once

// Numeric invariants of holomorphic triples E2 --phi--> E1 on a curve of genus g.
// Everything here is a function of the discrete type (n1, n2, d1, d2); no sheaf
// data is ever represented.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "upq/rational.hpp"

namespace upq {

// Ranks and degrees of a (sub/quotient) triple. Ranks may be zero, but not both.
struct Invariants {
  Int n1 = 0;
  Int n2 = 0;
  Int d1 = 0;
  Int d2 = 0;

  Int rank() const { return n1 + n2; }
  Int degree() const { return d1 + d2; }

  friend bool operator==(const Invariants&, const Invariants&) = default;
  friend Invariants operator-(const Invariants& a, const Invariants& b) {
    return {a.n1 - b.n1, a.n2 - b.n2, a.d1 - b.d1, a.d2 - b.d2};
  }
  friend Invariants operator+(const Invariants& a, const Invariants& b) {
    return {a.n1 + b.n1, a.n2 + b.n2, a.d1 + b.d1, a.d2 + b.d2};
  }
};

using SubtripleWitness = Invariants;

// Type of a triple: both ranks at least one.
class TripleType {
 public:
  // Throws std::domain_error unless n1 >= 1 and n2 >= 1.
  TripleType(Int n1, Int n2, Int d1, Int d2);

  Int n1() const { return v_.n1; }
  Int n2() const { return v_.n2; }
  Int d1() const { return v_.d1; }
  Int d2() const { return v_.d2; }
  Int rank() const { return v_.rank(); }
  Int degree() const { return v_.degree(); }
  Rational mu1() const { return Rational::frac(v_.d1, v_.n1); }
  Rational mu2() const { return Rational::frac(v_.d2, v_.n2); }
  const Invariants& invariants() const { return v_; }

  std::string str() const;

  friend bool operator==(const TripleType&, const TripleType&) = default;

 private:
  Invariants v_;
};

enum class Strictness { strict, non_strict };

struct WitnessResult {
  SubtripleWitness witness;
  std::optional<Rational> delta;  // absent when the witness was rejected
  bool pass = false;
  std::string error;
};

// Certificate check over supplied numeric subtriple data. This never decides
// whether an actual triple is alpha-stable: it only evaluates the inequality
// for each witness handed in.
struct WitnessReport {
  std::vector<WitnessResult> results;
  bool all_pass = false;
};

struct AlphaInterval {
  Rational lo;                // alpha_m = mu1 - mu2
  std::optional<Rational> hi; // alpha_M; nullopt means +infinity (n1 == n2)
  bool nonempty_possible = false;  // alpha_m >= 0
  bool single_point = false;       // n1 != n2 and alpha_m == alpha_M == 0
};

struct Thresholds {
  TripleType type;       // the type the thresholds were computed for (after duality)
  bool via_duality = false;
  Rational alpha_m;
  std::optional<Rational> alpha_M;
  std::vector<Rational> alpha_j;  // j = 0 .. n2 - 1
  Rational alpha_0;
  std::optional<Rational> alpha_t;  // n1 > n2 only
  Rational alpha_e;
  Rational alpha_L;
  bool alpha_L_closed_form = false;  // equal ranks use n(n-1)(mu1-mu2)
};

struct BundleModuli {
  Int rank = 0;
  Int degree = 0;
};

struct FibrationDims {
  TripleType type;  // type the formula was evaluated on (after duality)
  bool via_duality = false;
  bool equal_ranks = false;
  Int large_alpha_fiber_N = 0;
  bool fiber_nonempty = false;  // N >= 0 under the slope hypothesis
  bool slope_hypothesis = false;  // mu1 > mu2 (n1 > n2) or d1 > d2 (n1 == n2)
  // Base of the projective fibration: stable bundle moduli factors, and for
  // equal ranks a symmetric product of the curve of the given degree.
  std::vector<BundleModuli> base_factors;
  std::optional<Int> divisor_degree;
  std::string base_description;
};

Rational slope(Int n, Int d);
Rational alpha_slope(const Invariants& t, const Rational& alpha);
inline Rational alpha_slope(const TripleType& t, const Rational& alpha) {
  return alpha_slope(t.invariants(), alpha);
}

// mu_alpha(W) - mu_alpha(T). Negative on the stable side, zero on a wall.
Rational delta_alpha(const TripleType& t, const SubtripleWitness& w, const Rational& alpha);

WitnessReport witness_check(const TripleType& t, std::span<const SubtripleWitness> witnesses,
                            const Rational& alpha, Strictness mode);

AlphaInterval alpha_range(const TripleType& t);

TripleType dual(const TripleType& t);

// Throws std::domain_error if mu1 < mu2 (the alpha-range is empty). Types with
// n1 < n2 are evaluated on the dual type.
Thresholds thresholds(const TripleType& t);

Int chi(const Invariants& quotient, const Invariants& sub, Int g);
Int dim_stable_moduli(const TripleType& t, Int g);

FibrationDims fibration_dims(const TripleType& t, Int g);

void require_genus(Int g);

}  // namespace upq
