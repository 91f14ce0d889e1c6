#include "upq/classifier.hpp"

namespace upq {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

const char* citation_text(const std::string& tag) {
  static const std::map<std::string, const char*> text = {
      {cite::milnor_wood, "semistable U(p,q)-Higgs bundles satisfy |tau| <= min(p,q)(2g-2)"},
      {cite::toledo_zero, "tau = 0: M(a,b) is non-empty and connected"},
      {cite::toledo_zero_stable_open,
       "tau = 0: non-emptiness of the stable locus is not known; if non-empty it is smooth, "
       "connected, of the expected dimension"},
      {cite::general_toledo,
       "0 < |tau| < tau_M: the stable locus is a smooth non-empty manifold of dimension "
       "1+(p+q)^2(g-1) with connected closure"},
      {cite::coprime,
       "|tau| <= tau_M and GCD(p+q,a+b) = 1: M(a,b) is a non-empty connected smooth manifold of "
       "the expected dimension"},
      {cite::equal_rank_large_toledo,
       "p = q and (p-1)(2g-2) < |tau| <= p(2g-2): M(a,b) is non-empty and connected"},
      {cite::equal_rank_maximal,
       "p = q and |tau| = tau_M: M(a,b) is non-empty and connected; the stable locus is "
       "non-empty and smooth of the expected dimension"},
      {cite::rigidity,
       "p != q and |tau| = tau_M: every point is strictly semistable and splits off a "
       "U(min,min) summand with maximal Toledo invariant and a polystable bundle"},
      {cite::maximal_connected, "p != q and |tau| = tau_M: M(a,b) is non-empty and connected"},
      {cite::connectedness_open,
       "connectedness of M(a,b) itself is only proved under coprimality or the equal-rank "
       "large-Toledo window"},
      {cite::correspondence,
       "R_Gamma(a,b) is homeomorphic to M(a,b); irreducible representations correspond to "
       "stable Higgs bundles"},
      {cite::adjoint_fibration,
       "R_Gamma(a,b) fibres over R[a,b] with U(1)^{2g} fibres; no smoothness claims for R[a,b]"},
  };
  auto it = text.find(tag);
  return it == text.end() ? "" : it->second;
}

namespace {

void set(Verdict& v, Tri Verdict::*field, const char* name, Tri value, const char* tag) {
  v.*field = value;
  v.citations[name] = tag;
}

void derive_representations(Verdict& v) {
  RepresentationVerdict& rg = v.r_gamma;
  rg.irreducible_nonempty = v.stable_nonempty;
  rg.irreducible_closure_connected = v.closure_of_stable_connected;
  rg.nonempty = v.full_space_nonempty;
  rg.connected = v.full_space_connected;
  rg.smooth_expected_dim = v.full_space_smooth_expected_dim;
  if (rg.smooth_expected_dim == Tri::yes) rg.smooth_dim = expected_dim(v.input);
  for (const char* f : {"irreducible_nonempty", "irreducible_closure_connected", "nonempty",
                        "connected", "smooth_expected_dim"})
    rg.citations[f] = cite::correspondence;

  RepresentationVerdict& rp = v.r_pu;
  rp.irreducible_nonempty = v.stable_nonempty;
  rp.irreducible_closure_connected = v.closure_of_stable_connected;
  rp.nonempty = v.full_space_nonempty;
  rp.connected = v.full_space_connected;
  rp.smooth_expected_dim = Tri::unknown;
  for (const char* f : {"irreducible_nonempty", "irreducible_closure_connected", "nonempty",
                        "connected", "smooth_expected_dim"})
    rp.citations[f] = cite::adjoint_fibration;
}

}  // namespace

Verdict classify(const HiggsType& h) {
  Verdict v{.input = h, .toledo = toledo(h)};
  v.in_range = v.toledo.within_bound;
  v.coprime = coprime_smooth(h);
  const Rational abs_tau = abs(v.toledo.tau);
  const bool equal_ranks = h.p() == h.q();

  auto full_smoothness = [&](Tri otherwise, const char* tag) {
    if (v.coprime)
      set(v, &Verdict::full_space_smooth_expected_dim, "full_space_smooth_expected_dim", Tri::yes,
          cite::coprime);
    else
      set(v, &Verdict::full_space_smooth_expected_dim, "full_space_smooth_expected_dim", otherwise,
          tag);
  };

  if (!v.in_range) {
    v.regime = "out_of_range";
    for (auto [field, name] : {std::pair{&Verdict::stable_nonempty, "stable_nonempty"},
                               {&Verdict::closure_of_stable_connected, "closure_of_stable_connected"},
                               {&Verdict::full_space_nonempty, "full_space_nonempty"},
                               {&Verdict::full_space_connected, "full_space_connected"},
                               {&Verdict::full_space_smooth_expected_dim,
                                "full_space_smooth_expected_dim"}})
      set(v, field, name, Tri::no, cite::milnor_wood);
  } else if (v.toledo.tau.sign() == 0) {
    v.regime = "tau_zero";
    set(v, &Verdict::stable_nonempty, "stable_nonempty", Tri::unknown,
        cite::toledo_zero_stable_open);
    set(v, &Verdict::closure_of_stable_connected, "closure_of_stable_connected", Tri::unknown,
        cite::toledo_zero_stable_open);
    set(v, &Verdict::full_space_nonempty, "full_space_nonempty", Tri::yes, cite::toledo_zero);
    set(v, &Verdict::full_space_connected, "full_space_connected", Tri::yes, cite::toledo_zero);
    full_smoothness(Tri::unknown, cite::toledo_zero_stable_open);
  } else if (abs_tau < v.toledo.tau_M) {
    v.regime = "generic";
    set(v, &Verdict::stable_nonempty, "stable_nonempty", Tri::yes, cite::general_toledo);
    set(v, &Verdict::closure_of_stable_connected, "closure_of_stable_connected", Tri::yes,
        cite::general_toledo);
    set(v, &Verdict::full_space_nonempty, "full_space_nonempty", Tri::yes, cite::general_toledo);
    v.stable_smooth_dim = expected_dim(h);
    v.citations["stable_smooth_dim"] = cite::general_toledo;
    if (v.coprime) {
      set(v, &Verdict::full_space_connected, "full_space_connected", Tri::yes, cite::coprime);
    } else if (equal_ranks && abs_tau > Rational((h.p() - 1) * (2 * h.g() - 2))) {
      set(v, &Verdict::full_space_connected, "full_space_connected", Tri::yes,
          cite::equal_rank_large_toledo);
    } else {
      set(v, &Verdict::full_space_connected, "full_space_connected", Tri::unknown,
          cite::connectedness_open);
    }
    full_smoothness(Tri::unknown, cite::connectedness_open);
  } else if (equal_ranks) {
    v.regime = "maximal_equal_rank";
    set(v, &Verdict::stable_nonempty, "stable_nonempty", Tri::yes, cite::equal_rank_maximal);
    set(v, &Verdict::closure_of_stable_connected, "closure_of_stable_connected", Tri::yes,
        cite::equal_rank_maximal);
    set(v, &Verdict::full_space_nonempty, "full_space_nonempty", Tri::yes,
        cite::equal_rank_maximal);
    set(v, &Verdict::full_space_connected, "full_space_connected", Tri::yes,
        cite::equal_rank_maximal);
    v.stable_smooth_dim = expected_dim(h);
    v.citations["stable_smooth_dim"] = cite::equal_rank_maximal;
    full_smoothness(Tri::unknown, cite::equal_rank_maximal);
  } else {
    v.regime = "maximal_rigid";
    v.rigid = true;
    v.rigidity_data = rigidity(h);
    v.citations["rigid"] = cite::rigidity;
    set(v, &Verdict::stable_nonempty, "stable_nonempty", Tri::no, cite::rigidity);
    set(v, &Verdict::closure_of_stable_connected, "closure_of_stable_connected", Tri::no,
        cite::rigidity);
    set(v, &Verdict::full_space_nonempty, "full_space_nonempty", Tri::yes,
        cite::maximal_connected);
    set(v, &Verdict::full_space_connected, "full_space_connected", Tri::yes,
        cite::maximal_connected);
    // Dimension at a smooth point is strictly below the expected one.
    set(v, &Verdict::full_space_smooth_expected_dim, "full_space_smooth_expected_dim", Tri::no,
        cite::rigidity);
  }
  derive_representations(v);
  return v;
}

}  // namespace upq
