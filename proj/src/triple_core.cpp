#include "upq/triple_core.hpp"

#include <algorithm>
#include <stdexcept>

#include "upq/wall_crossing.hpp"

namespace upq {

void require_genus(Int g) {
  if (g < 2) throw std::domain_error("genus must be at least 2, got " + std::to_string(g));
}

TripleType::TripleType(Int n1, Int n2, Int d1, Int d2) : v_{n1, n2, d1, d2} {
  if (n1 < 1 || n2 < 1)
    throw std::domain_error("triple ranks must be positive, got (" + std::to_string(n1) + "," +
                            std::to_string(n2) + ")");
}

std::string TripleType::str() const {
  return "(" + std::to_string(v_.n1) + "," + std::to_string(v_.n2) + "," + std::to_string(v_.d1) +
         "," + std::to_string(v_.d2) + ")";
}

Rational slope(Int n, Int d) {
  if (n < 1) throw std::domain_error("slope of a rank " + std::to_string(n) + " object");
  return Rational::frac(d, n);
}

Rational alpha_slope(const Invariants& t, const Rational& alpha) {
  if (t.rank() <= 0) throw std::domain_error("alpha-slope of a triple of total rank zero");
  return Rational::frac(t.degree(), t.rank()) + alpha * Rational::frac(t.n2, t.rank());
}

Rational delta_alpha(const TripleType& t, const SubtripleWitness& w, const Rational& alpha) {
  if (w.n1 < 0 || w.n2 < 0 || w.rank() == 0)
    throw std::domain_error("witness ranks must be nonnegative and not both zero");
  return alpha_slope(w, alpha) - alpha_slope(t, alpha);
}

WitnessReport witness_check(const TripleType& t, std::span<const SubtripleWitness> witnesses,
                            const Rational& alpha, Strictness mode) {
  WitnessReport report;
  report.all_pass = true;
  for (const auto& w : witnesses) {
    WitnessResult r;
    r.witness = w;
    if (w.n1 < 0 || w.n2 < 0 || w.n1 > t.n1() || w.n2 > t.n2()) {
      r.error = "witness ranks outside [0,n1] x [0,n2]";
    } else if (w.rank() == 0) {
      r.error = "witness has total rank zero";
    } else if (mode == Strictness::strict && w == t.invariants()) {
      r.error = "witness equals the triple itself (not proper)";
    } else {
      r.delta = delta_alpha(t, w, alpha);
      r.pass = mode == Strictness::strict ? r.delta->sign() < 0 : r.delta->sign() <= 0;
    }
    report.all_pass = report.all_pass && r.pass;
    report.results.push_back(std::move(r));
  }
  return report;
}

AlphaInterval alpha_range(const TripleType& t) {
  AlphaInterval r;
  r.lo = t.mu1() - t.mu2();
  if (t.n1() != t.n2()) {
    Int gap = t.n1() > t.n2() ? t.n1() - t.n2() : t.n2() - t.n1();
    r.hi = (Rational(1) + Rational::frac(t.rank(), gap)) * r.lo;
  }
  r.nonempty_possible = r.lo.sign() >= 0;
  r.single_point = r.hi && r.lo.sign() == 0;
  return r;
}

TripleType dual(const TripleType& t) { return {t.n2(), t.n1(), -t.d2(), -t.d1()}; }

Thresholds thresholds(const TripleType& input) {
  const bool flip = input.n1() < input.n2();
  const TripleType t = flip ? dual(input) : input;
  const Rational gap = t.mu1() - t.mu2();
  if (gap.sign() < 0)
    throw std::domain_error("mu1 < mu2 for " + input.str() +
                            ": the alpha-range is empty (duality preserves mu1 - mu2)");

  const Int n1 = t.n1();
  const Int n2 = t.n2();
  const AlphaInterval range = alpha_range(t);

  Thresholds th{.type = t, .via_duality = flip, .alpha_m = range.lo, .alpha_M = range.hi};
  for (Int j = 0; j < n2; ++j) {
    th.alpha_j.push_back(Rational(2 * n1 * n2) / Rational(n2 * (n1 - n2) + (j + 1) * (n1 + n2)) *
                         gap);
  }
  th.alpha_0 = th.alpha_j.front();
  th.alpha_e = std::max(th.alpha_m, th.alpha_0);
  if (n1 > n2) {
    th.alpha_t = *th.alpha_M - Rational::frac(n1 + n2, n2 * (n1 - n2));
    th.alpha_e = std::max(th.alpha_e, *th.alpha_t);
  }
  th.alpha_L = stabilization_threshold(t);
  th.alpha_L_closed_form = n1 == n2;
  return th;
}

Int chi(const Invariants& q, const Invariants& s, Int g) {
  return (1 - g) * (q.n1 * s.n1 + q.n2 * s.n2 - q.n2 * s.n1) + q.n1 * s.d1 - s.n1 * q.d1 +
         q.n2 * s.d2 - s.n2 * q.d2 - q.n2 * s.d1 + s.n1 * q.d2;
}

Int dim_stable_moduli(const TripleType& t, Int g) {
  require_genus(g);
  return (g - 1) * (t.n1() * t.n1() + t.n2() * t.n2() - t.n1() * t.n2()) - t.n1() * t.d2() +
         t.n2() * t.d1() + 1;
}

FibrationDims fibration_dims(const TripleType& input, Int g) {
  require_genus(g);
  const bool flip = input.n1() < input.n2();
  const TripleType t = flip ? dual(input) : input;
  FibrationDims f{.type = t, .via_duality = flip, .equal_ranks = t.n1() == t.n2()};

  if (f.equal_ranks) {
    const Int n = t.n1();
    f.large_alpha_fiber_N = n * (t.d1() - t.d2()) - 1;
    f.slope_hypothesis = t.d1() > t.d2();
    f.base_factors = {{n, t.d2()}};
    f.divisor_degree = t.d1() - t.d2();
    f.base_description = "M^s(" + std::to_string(n) + "," + std::to_string(t.d2()) + ") x Div^" +
                         std::to_string(t.d1() - t.d2()) + "(X)";
  } else {
    f.large_alpha_fiber_N =
        t.n2() * t.d1() - t.n1() * t.d2() + t.n1() * (t.n1() - t.n2()) * (g - 1) - 1;
    f.slope_hypothesis = t.mu1() > t.mu2();
    f.base_factors = {{t.n1() - t.n2(), t.d1() - t.d2()}, {t.n2(), t.d2()}};
    f.base_description = "M^s(" + std::to_string(t.n1() - t.n2()) + "," +
                         std::to_string(t.d1() - t.d2()) + ") x M^s(" + std::to_string(t.n2()) +
                         "," + std::to_string(t.d2()) + ")";
  }
  f.fiber_nonempty = f.slope_hypothesis && f.large_alpha_fiber_N >= 0;
  return f;
}

}  // namespace upq
