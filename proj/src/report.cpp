#include "upq/report.hpp"

#include <algorithm>
#include <sstream>

namespace upq {

namespace {

template <class T>
Json array_of(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

Json opt_int(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const std::optional<Rational>& r) { return r ? to_json(*r) : Json(nullptr); }

Json to_json(const Invariants& v) {
  return Json{{"n1", v.n1}, {"n2", v.n2}, {"d1", v.d1}, {"d2", v.d2}};
}

Json to_json(const TripleType& t) { return to_json(t.invariants()); }

Json to_json(const AlphaInterval& r) {
  return Json{{"lo", to_json(r.lo)},
              {"hi", to_json(r.hi)},
              {"nonempty_possible", r.nonempty_possible},
              {"single_point", r.single_point}};
}

Json to_json(const Thresholds& t) {
  Json aj = Json::array();
  for (const auto& a : t.alpha_j) aj.push_back(to_json(a));
  return Json{{"type", to_json(t.type)},
              {"via_duality", t.via_duality},
              {"alpha_m", to_json(t.alpha_m)},
              {"alpha_M", to_json(t.alpha_M)},
              {"alpha_j", aj},
              {"alpha_0", to_json(t.alpha_0)},
              {"alpha_t", to_json(t.alpha_t)},
              {"alpha_e", to_json(t.alpha_e)},
              {"alpha_L", to_json(t.alpha_L)},
              {"alpha_L_closed_form", t.alpha_L_closed_form}};
}

Json to_json(const BundleModuli& b) { return Json{{"rank", b.rank}, {"degree", b.degree}}; }

Json to_json(const FibrationDims& f) {
  return Json{{"type", to_json(f.type)},
              {"via_duality", f.via_duality},
              {"equal_ranks", f.equal_ranks},
              {"large_alpha_fiber_N", f.large_alpha_fiber_N},
              {"fiber_nonempty", f.fiber_nonempty},
              {"slope_hypothesis", f.slope_hypothesis},
              {"base_factors", array_of(f.base_factors)},
              {"divisor_degree", opt_int(f.divisor_degree)},
              {"base_description", f.base_description}};
}

Json to_json(const WitnessReport& r) {
  Json items = Json::array();
  for (const auto& w : r.results) {
    Json j{{"witness", to_json(w.witness)}, {"delta", to_json(w.delta)}, {"pass", w.pass}};
    j["error"] = w.error.empty() ? Json(nullptr) : Json(w.error);
    items.push_back(j);
  }
  return Json{{"results", items}, {"all_pass", r.all_pass}};
}

Json to_json(const WallWitness& w) {
  return Json{{"n1p", w.n1p}, {"n2p", w.n2p}, {"dsum", w.dsum}};
}

Json to_json(const Wall& w) {
  return Json{{"alpha", to_json(w.alpha)},
              {"witnesses", array_of(w.witnesses)},
              {"stabilized", w.stabilized}};
}

Json to_json(const CriticalCheck& c) {
  return Json{{"critical", c.critical}, {"witnesses", array_of(c.witnesses)}};
}

Json to_json(const IntegerGenericity& g) {
  return Json{{"guaranteed_noncritical", g.guaranteed_noncritical},
              {"no_alpha_independent", g.no_alpha_independent}};
}

Json to_json(const Chamber& c) {
  return Json{{"lo", to_json(c.lo)},
              {"hi", to_json(c.hi)},
              {"contains_2g_minus_2", c.contains_2g_minus_2},
              {"is_large_chamber", c.is_large_chamber}};
}

Json to_json(const ChamberReport& r) {
  return Json{{"type", to_json(r.type)},
              {"g", r.g},
              {"two_g_minus_2", to_json(r.two_g_minus_2)},
              {"alpha_m", to_json(r.alpha_m)},
              {"alpha_M", to_json(r.alpha_M)},
              {"alpha_L", to_json(r.alpha_L)},
              {"upper", to_json(r.upper)},
              {"range_empty", r.range_empty},
              {"two_g_minus_2_in_range", r.two_g_minus_2_in_range},
              {"two_g_minus_2_on_wall", r.two_g_minus_2_on_wall},
              {"two_g_minus_2_at_endpoint", r.two_g_minus_2_at_endpoint},
              {"walls", array_of(r.walls)},
              {"chambers", array_of(r.chambers)},
              {"walls_to_large_chamber", r.walls_to_large_chamber}};
}

Json to_json(const FlipDims& f) {
  return Json{{"sub", to_json(f.sub)},
              {"quotient", to_json(f.quotient)},
              {"alpha_c", to_json(f.alpha_c)},
              {"plus_side", f.plus_side},
              {"dim_moduli", f.dim_moduli},
              {"stilde_dim", f.stilde_dim},
              {"minus_chi_cross", f.minus_chi_cross},
              {"fiber_dim", f.fiber_dim},
              {"fiber_nonnegative", f.fiber_nonnegative},
              {"minus_chi_reverse", f.minus_chi_reverse},
              {"guaranteed_codim", f.guaranteed_codim},
              {"codim_bound_applies", f.codim_bound_applies}};
}

Json to_json(const HiggsType& h) {
  return Json{{"p", h.p()}, {"q", h.q()}, {"a", h.a()}, {"b", h.b()}, {"g", h.g()}};
}

Json to_json(const Toledo& t) {
  return Json{{"tau", to_json(t.tau)},
              {"tau_M", to_json(t.tau_M)},
              {"within_bound", t.within_bound},
              {"saturated", t.saturated}};
}

Json to_json(const MinimaRealization& m) {
  return Json{{"case", to_string(m.case_tag)},
              {"triple", to_json(m.triple)},
              {"alternate", m.alternate ? to_json(*m.alternate) : Json(nullptr)},
              {"alpha", to_json(m.alpha)},
              {"product", array_of(m.product)}};
}

Json to_json(const MwRelations& m) {
  Json facts = Json::array();
  for (const auto& f : m.facts) facts.push_back(f);
  return Json{{"triple", to_json(m.triple)},
              {"two_g_minus_2", to_json(m.two_g_minus_2)},
              {"alpha_m", to_json(m.alpha_m)},
              {"alpha_M", to_json(m.alpha_M)},
              {"toledo", to_json(m.toledo)},
              {"alpha_m_vs_2g2", m.alpha_m_vs_2g2},
              {"alpha_M_vs_2g2", m.alpha_M_vs_2g2 ? Json(*m.alpha_M_vs_2g2) : Json(nullptr)},
              {"lower_relation_holds", m.lower_relation_holds},
              {"upper_relation_holds", m.upper_relation_holds},
              {"facts", facts}};
}

Json to_json(const RigidityReport& r) {
  return Json{{"applies", r.applies},
              {"factor1", r.factor1 ? to_json(*r.factor1) : Json(nullptr)},
              {"factor2", r.factor2 ? to_json(*r.factor2) : Json(nullptr)},
              {"dim_sum", r.dim_sum},
              {"dim_closed_form", r.dim_closed_form},
              {"dim_transposed_form", r.dim_transposed_form},
              {"transposed_form_mismatch", r.transposed_form_mismatch},
              {"expected", r.expected},
              {"below_expected", r.below_expected}};
}

Json to_json(const UkProfile& u) { return Json{{"rank", u.rank}, {"degree", u.degree}}; }

Json to_json(const MorseIndex& m) {
  return Json{{"complex_dim", m.complex_dim},
              {"real_index", m.real_index},
              {"negative_advisory", m.negative_advisory}};
}

Json to_json(const ClassPair& c) {
  return Json{{"a", c.a}, {"b", c.b}, {"canonical", c.canonical}};
}

Json to_json(const CensusReport& r) {
  Json lines = Json::array();
  for (const auto& [t, pts] : r.lines) lines.push_back(Json{{"t", t}, {"points", array_of(pts)}});
  return Json{{"p", r.p},
              {"q", r.q},
              {"g", r.g},
              {"k", r.k},
              {"count", r.count},
              {"expected_count", r.expected_count},
              {"points", array_of(r.points)},
              {"coprime_points", array_of(r.coprime_points)},
              {"lines", lines}};
}

Json to_json(const TauQuotientFacts& f) {
  return Json{{"k", f.k},
              {"image_lattice_step", to_json(f.image_lattice_step)},
              {"kernel_size", f.kernel_size},
              {"generator", Json{{"a", f.generator_a}, {"b", f.generator_b}}}};
}

Json to_json(const CoprimePartition& p) {
  return Json{{"coprime", array_of(p.coprime)},
              {"non_coprime", array_of(p.non_coprime)},
              {"both_nonempty", p.both_nonempty}};
}

Json to_json(const RepresentationVerdict& v) {
  Json cites(v.citations);
  return Json{{"irreducible_nonempty", to_string(v.irreducible_nonempty)},
              {"irreducible_closure_connected", to_string(v.irreducible_closure_connected)},
              {"nonempty", to_string(v.nonempty)},
              {"connected", to_string(v.connected)},
              {"smooth_expected_dim", to_string(v.smooth_expected_dim)},
              {"smooth_dim", opt_int(v.smooth_dim)},
              {"citations", cites}};
}

Json to_json(const Verdict& v) {
  Json cites(v.citations);
  return Json{{"input", to_json(v.input)},
              {"toledo", to_json(v.toledo)},
              {"regime", v.regime},
              {"in_range", v.in_range},
              {"coprime", v.coprime},
              {"stable_nonempty", to_string(v.stable_nonempty)},
              {"stable_smooth_dim", opt_int(v.stable_smooth_dim)},
              {"closure_of_stable_connected", to_string(v.closure_of_stable_connected)},
              {"full_space_nonempty", to_string(v.full_space_nonempty)},
              {"full_space_connected", to_string(v.full_space_connected)},
              {"full_space_smooth_expected_dim", to_string(v.full_space_smooth_expected_dim)},
              {"rigid", v.rigid},
              {"rigidity_data", v.rigidity_data ? to_json(*v.rigidity_data) : Json(nullptr)},
              {"citations", cites},
              {"r_gamma", to_json(v.r_gamma)},
              {"r_pu", to_json(v.r_pu)}};
}

namespace {

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    if (j.empty()) rows.emplace_back(path, "{}");
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array()) {
    if (j.empty()) rows.emplace_back(path, "[]");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(path, j.get<std::string>());
  } else {
    rows.emplace_back(path, j.dump());
  }
}

}  // namespace

std::string render_table(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return out.str();
}

}  // namespace upq
