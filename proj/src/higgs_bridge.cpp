#include "upq/higgs_bridge.hpp"

#include <algorithm>
#include <stdexcept>

namespace upq {

HiggsType::HiggsType(Int p, Int q, Int a, Int b, Int g) : p_(p), q_(q), a_(a), b_(b), g_(g) {
  if (p < 1 || q < 1)
    throw std::domain_error("ranks p, q must be positive, got (" + std::to_string(p) + "," +
                            std::to_string(q) + ")");
  require_genus(g);
}

std::string HiggsType::str() const {
  return "(p,q,a,b,g)=(" + std::to_string(p_) + "," + std::to_string(q_) + "," +
         std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(g_) + ")";
}

Rational toledo_invariant(Int p, Int q, Int a, Int b) {
  return Rational::frac(2 * (q * a - p * b), p + q);
}

Toledo toledo(const HiggsType& h) {
  Toledo t;
  t.tau = toledo_invariant(h.p(), h.q(), h.a(), h.b());
  t.tau_M = Rational(std::min(h.p(), h.q()) * (2 * h.g() - 2));
  t.within_bound = abs(t.tau) <= t.tau_M;
  t.saturated = abs(t.tau) == t.tau_M;
  return t;
}

const char* to_string(Vanishing v) {
  switch (v) {
    case Vanishing::gamma_zero: return "gamma_zero";
    case Vanishing::beta_zero: return "beta_zero";
    case Vanishing::both_zero: return "both_zero";
  }
  return "?";
}

Vanishing vanishing_pattern(const HiggsType& h) {
  // sign(a/p - b/q) = sign(qa - pb)
  const Int s = h.q() * h.a() - h.p() * h.b();
  if (s < 0) return Vanishing::gamma_zero;
  if (s > 0) return Vanishing::beta_zero;
  return Vanishing::both_zero;
}

namespace {

TripleType gamma_zero_triple(const HiggsType& h) {
  return {h.p(), h.q(), h.a() + h.p() * (2 * h.g() - 2), h.b()};
}

TripleType beta_zero_triple(const HiggsType& h) {
  return {h.q(), h.p(), h.b() + h.q() * (2 * h.g() - 2), h.a()};
}

int sign_of(const Rational& r) { return r.sign() < 0 ? -1 : (r.sign() > 0 ? 1 : 0); }

}  // namespace

MinimaRealization minima_triple_type(const HiggsType& h) {
  const Vanishing v = vanishing_pattern(h);
  MinimaRealization m{.case_tag = v,
                      .triple = v == Vanishing::beta_zero ? beta_zero_triple(h)
                                                          : gamma_zero_triple(h),
                      .alpha = Rational(2 * h.g() - 2)};
  if (v == Vanishing::both_zero) {
    m.alternate = beta_zero_triple(h);
    m.product = {{h.p(), h.a()}, {h.q(), h.b()}};
  }
  return m;
}

MwRelations mw_relations(const HiggsType& h) {
  const MinimaRealization mr = minima_triple_type(h);
  const AlphaInterval range = alpha_range(mr.triple);
  MwRelations r{.triple = mr.triple,
                .two_g_minus_2 = mr.alpha,
                .alpha_m = range.lo,
                .alpha_M = range.hi,
                .toledo = toledo(h)};
  r.alpha_m_vs_2g2 = sign_of(r.alpha_m - r.two_g_minus_2);
  const bool tau_zero = r.toledo.tau.sign() == 0;
  r.lower_relation_holds = r.alpha_m_vs_2g2 <= 0 && ((r.alpha_m_vs_2g2 == 0) == tau_zero);
  r.facts.push_back("2g-2 " + std::string(r.alpha_m_vs_2g2 < 0 ? ">" : "=") + " alpha_m = " +
                    r.alpha_m.str() + (tau_zero ? " (tau = 0)" : " (tau != 0)"));

  if (h.p() != h.q()) {
    r.alpha_M_vs_2g2 = sign_of(*r.alpha_M - r.two_g_minus_2);
    const bool upper_ok = *r.alpha_M_vs_2g2 >= 0;
    r.upper_relation_holds = upper_ok == r.toledo.within_bound &&
                             ((*r.alpha_M_vs_2g2 == 0) == r.toledo.saturated);
    r.facts.push_back("alpha_M = " + r.alpha_M->str() +
                      (upper_ok ? " >= 2g-2" : " < 2g-2") +
                      (r.toledo.within_bound ? ", |tau| <= tau_M" : ", |tau| > tau_M") +
                      (r.toledo.saturated ? " (saturated: 2g-2 = alpha_M)" : ""));
  } else {
    const bool alpha_m_ok = r.alpha_m.sign() >= 0;
    r.upper_relation_holds =
        alpha_m_ok == r.toledo.within_bound && ((r.alpha_m.sign() == 0) == r.toledo.saturated);
    r.facts.push_back(std::string("p = q: alpha_m ") + (alpha_m_ok ? ">= 0" : "< 0") +
                      (r.toledo.within_bound ? ", |tau| <= tau_M" : ", |tau| > tau_M") +
                      (r.toledo.saturated ? " (saturated: alpha_m = 0)" : ""));
  }
  return r;
}

Int expected_dim(const HiggsType& h) { return 1 + h.rank() * h.rank() * (h.g() - 1); }

RigidityReport rigidity(const HiggsType& h) {
  RigidityReport r;
  const Toledo t = toledo(h);
  const Int lo = std::min(h.p(), h.q());
  const Int hi = std::max(h.p(), h.q());
  const Int g1 = h.g() - 1;
  r.expected = expected_dim(h);
  r.dim_closed_form = 2 + (5 * lo * lo + hi * hi - 2 * lo * hi) * g1;
  r.dim_transposed_form = 2 + (lo * lo + 5 * hi * hi - 2 * lo * hi) * g1;
  r.applies = h.p() != h.q() && t.saturated;
  if (!r.applies) return r;

  // Normalize to rank(V) < rank(W) by swapping V and W (tau changes sign), then
  // to tau > 0 by dualizing (degrees change sign).
  const bool swapped = h.p() > h.q();
  Int a = swapped ? h.b() : h.a();
  Int b = swapped ? h.a() : h.b();
  const Rational tau = swapped ? -t.tau : t.tau;
  const bool dualized = tau.sign() < 0;
  if (dualized) {
    a = -a;
    b = -b;
  }
  const Int shift = lo * (2 * h.g() - 2);
  Int fa = a, fb = a - shift;    // U(lo,lo) summand degrees
  Int rest = b - a + shift;      // rank hi - lo bundle degree
  if (dualized) {
    fa = -fa;
    fb = -fb;
    rest = -rest;
  }
  r.factor1 = swapped ? HiggsType(lo, lo, fb, fa, h.g()) : HiggsType(lo, lo, fa, fb, h.g());
  r.factor2 = BundleModuli{hi - lo, rest};
  r.dim_sum = (1 + (2 * lo) * (2 * lo) * g1) + (1 + (hi - lo) * (hi - lo) * g1);
  r.transposed_form_mismatch = r.dim_transposed_form != r.dim_sum;
  r.below_expected = r.dim_sum < r.expected;
  return r;
}

bool coprime_smooth(const HiggsType& h) { return gcd(h.rank(), h.degree()) == 1; }

}  // namespace upq
