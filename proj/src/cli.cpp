#include "upq/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <optional>
#include <set>
#include <stdexcept>

#include "upq/report.hpp"

namespace upq {

namespace {

// Integer list "1,2,3" given to a flag.
std::vector<Int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    Int v = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (item.empty() || ec != std::errc() || ptr != last)
      throw std::invalid_argument(flag + ": expected comma-separated integers, got '" + text + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Invariants parse_invariants(const std::string& text, const std::string& flag) {
  const auto v = parse_int_list(text, flag);
  if (v.size() != 4) throw std::invalid_argument(flag + ": expected n1,n2,d1,d2, got '" + text + "'");
  return {v[0], v[1], v[2], v[3]};
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw std::invalid_argument(flag + ": expected an integer or NUM/DEN, got '" + text + "'");
  }
}

struct TripleFlags {
  Int n1 = 0, n2 = 0, d1 = 0, d2 = 0;
  void add(CLI::App* app) {
    app->add_option("--n1", n1, "rank of E1")->required();
    app->add_option("--n2", n2, "rank of E2")->required();
    app->add_option("--d1", d1, "degree of E1")->required();
    app->add_option("--d2", d2, "degree of E2")->required();
  }
  TripleType type() const { return TripleType(n1, n2, d1, d2); }
  Json json() const { return Json{{"n1", n1}, {"n2", n2}, {"d1", d1}, {"d2", d2}}; }
};

struct HiggsFlags {
  Int p = 0, q = 0, a = 0, b = 0;
  void add(CLI::App* app) {
    app->add_option("--p", p, "rank of V")->required();
    app->add_option("--q", q, "rank of W")->required();
    app->add_option("--a", a, "degree of V")->required();
    app->add_option("--b", b, "degree of W")->required();
  }
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::set<std::string> citations;
  std::vector<std::string> warnings;

  Json json() const {
    Json cites = Json::object();
    for (const auto& tag : citations) cites[tag] = citation_text(tag);
    Json warn = Json::array();
    for (const auto& w : warnings) warn.push_back(w);
    return Json{{"command", command},
                {"inputs", inputs},
                {"outputs", outputs},
                {"citations", cites},
                {"warnings", warn}};
  }
};

void collect_citations(const std::map<std::string, std::string>& m, std::set<std::string>& into) {
  for (const auto& [field, tag] : m) into.insert(tag);
}

const char* kRigidityWarning =
    "rigidity: the transposed closed form 2+(m^2+5M^2-2mM)(g-1) disagrees with the component sum; "
    "the component sum 2+(5m^2+M^2-2mM)(g-1) is reported";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of holomorphic triples and U(p,q)-Higgs bundles", "upq"};
  app.require_subcommand(1);

  bool json = false;
  Int g = 2;
  std::string alpha_text, cutoff_text, split_text, ranks_text, degrees_text;
  std::vector<std::string> interval_text, witness_texts;
  bool strict = false, closed = false;
  std::optional<Int> m_opt, k_opt, a_opt, b_opt;
  TripleFlags tf;
  HiggsFlags hf;
  Int cp = 0, cq = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "structured output");
    sub->add_option("--g", g, "genus (>= 2)")->capture_default_str();
  };

  CLI::App* triple = app.add_subcommand("triple", "thresholds, dimensions, witness checks");
  tf.add(triple);
  common(triple);
  triple->add_option("--alpha", alpha_text, "stability parameter NUM/DEN");
  triple->add_option("--witness", witness_texts, "subtriple n1,n2,d1,d2 (repeatable)");
  triple->add_flag("--strict", strict, "witness check with strict inequality");
  triple->add_option("--split", split_text, "subtriple n1,n2,d1,d2 for flip-locus dimensions");

  CLI::App* walls = app.add_subcommand("walls", "critical values in an interval");
  tf.add(walls);
  common(walls);
  walls->add_option("--interval", interval_text, "LO HI")->expected(2);
  walls->add_flag("--closed", closed, "include interval endpoints");
  walls->add_option("--alpha", alpha_text, "test a single value for criticality");
  walls->add_option("--m", m_opt, "integer for the GCD genericity test");

  CLI::App* chambers_cmd = app.add_subcommand("chambers", "chamber decomposition of the alpha-range");
  tf.add(chambers_cmd);
  common(chambers_cmd);
  chambers_cmd->add_option("--cutoff", cutoff_text, "upper end for equal ranks");

  CLI::App* higgs = app.add_subcommand("higgs", "Toledo invariant and minima triples");
  hf.add(higgs);
  common(higgs);

  CLI::App* rig = app.add_subcommand("rigidity", "maximal Toledo decomposition");
  hf.add(rig);
  common(rig);

  CLI::App* morse = app.add_subcommand("morse", "Hodge chain bookkeeping");
  common(morse);
  morse->add_option("--ranks", ranks_text, "ranks r1,...,rm")->required();
  morse->add_option("--degrees", degrees_text, "degrees e1,...,em")->required();
  morse->add_option("--k", k_opt, "single weight index for dim H^1");

  CLI::App* census = app.add_subcommand("census", "component labels of PU(p,q)");
  common(census);
  census->add_option("--p", cp, "p")->required();
  census->add_option("--q", cq, "q")->required();
  census->add_option("--a", a_opt, "canonicalize this class (with --b)");
  census->add_option("--b", b_opt, "canonicalize this class (with --a)");

  CLI::App* classify_cmd = app.add_subcommand("classify", "connectedness and smoothness verdict");
  hf.add(classify_cmd);
  common(classify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Report rep;
  try {
    if (*triple) {
      rep.command = "triple";
      const TripleType t = tf.type();
      rep.inputs = tf.json();
      rep.inputs["g"] = g;
      require_genus(g);
      Json& o = rep.outputs;
      o["type"] = to_json(t);
      o["mu1"] = to_json(t.mu1());
      o["mu2"] = to_json(t.mu2());
      o["dual"] = to_json(dual(t));
      o["alpha_range"] = to_json(alpha_range(t));
      try {
        o["thresholds"] = to_json(thresholds(t));
      } catch (const std::domain_error& e) {
        o["thresholds"] = nullptr;
        rep.warnings.push_back(std::string("thresholds: ") + e.what());
      }
      o["dim_stable_moduli"] = dim_stable_moduli(t, g);
      o["chi_self"] = chi(t.invariants(), t.invariants(), g);
      const FibrationDims f = fibration_dims(t, g);
      o["fibration"] = to_json(f);
      if (!f.fiber_nonempty) rep.warnings.push_back("fibration: fiber dimension N < 0 (empty fiber)");
      std::optional<Rational> alpha;
      if (!alpha_text.empty()) {
        alpha = parse_rational(alpha_text, "--alpha");
        rep.inputs["alpha"] = to_json(*alpha);
        o["alpha_slope"] = to_json(alpha_slope(t, *alpha));
      }
      if (!witness_texts.empty()) {
        if (!alpha) throw std::invalid_argument("--witness: requires --alpha");
        std::vector<SubtripleWitness> ws;
        Json wj = Json::array();
        for (const auto& s : witness_texts) {
          ws.push_back(parse_invariants(s, "--witness"));
          wj.push_back(to_json(ws.back()));
        }
        rep.inputs["witnesses"] = wj;
        rep.inputs["strict"] = strict;
        o["witness_check"] =
            to_json(witness_check(t, ws, *alpha, strict ? Strictness::strict : Strictness::non_strict));
        rep.warnings.push_back(
            "witness_check evaluates only the supplied subtriple data; it does not decide stability");
      }
      if (!split_text.empty()) {
        const Invariants sub = parse_invariants(split_text, "--split");
        rep.inputs["split"] = to_json(sub);
        o["flip"] = to_json(flip_dims(t, sub, g));
      }
    } else if (*walls) {
      rep.command = "walls";
      const TripleType t = tf.type();
      rep.inputs = tf.json();
      rep.inputs["g"] = g;
      WallInterval iv = default_wall_interval(t, g);
      if (!interval_text.empty()) {
        iv.lo = parse_rational(interval_text[0], "--interval");
        iv.hi = parse_rational(interval_text[1], "--interval");
        iv.include_lo = iv.include_hi = closed;
      }
      rep.inputs["interval"] = Json{{"lo", to_json(iv.lo)},
                                    {"hi", to_json(iv.hi)},
                                    {"include_lo", iv.include_lo},
                                    {"include_hi", iv.include_hi}};
      Json ws = Json::array();
      for (const auto& w : enumerate_walls(t, iv)) ws.push_back(to_json(w));
      rep.outputs["walls"] = ws;
      if (!alpha_text.empty()) {
        const Rational a = parse_rational(alpha_text, "--alpha");
        rep.inputs["alpha"] = to_json(a);
        rep.outputs["is_critical"] = to_json(is_critical(t, a));
      }
      if (m_opt) {
        rep.inputs["m"] = *m_opt;
        rep.outputs["integer_genericity"] = to_json(integer_genericity(t, *m_opt));
      }
    } else if (*chambers_cmd) {
      rep.command = "chambers";
      const TripleType t = tf.type();
      rep.inputs = tf.json();
      rep.inputs["g"] = g;
      std::optional<Rational> cutoff;
      if (!cutoff_text.empty()) {
        cutoff = parse_rational(cutoff_text, "--cutoff");
        rep.inputs["cutoff"] = to_json(*cutoff);
      }
      const ChamberReport r = chambers(t, g, cutoff);
      rep.outputs = to_json(r);
      if (r.two_g_minus_2_on_wall) rep.warnings.push_back("2g-2 lies on a wall");
      if (r.range_empty) rep.warnings.push_back("alpha-range is empty");
    } else if (*higgs) {
      rep.command = "higgs";
      const HiggsType h(hf.p, hf.q, hf.a, hf.b, g);
      rep.inputs = to_json(h);
      Json& o = rep.outputs;
      o["toledo"] = to_json(toledo(h));
      o["vanishing"] = to_string(vanishing_pattern(h));
      o["minima"] = to_json(minima_triple_type(h));
      o["mw_relations"] = to_json(mw_relations(h));
      o["expected_dim"] = expected_dim(h);
      o["coprime_smooth"] = coprime_smooth(h);
      rep.citations.insert(cite::milnor_wood);
      if (coprime_smooth(h)) rep.citations.insert(cite::coprime);
    } else if (*rig) {
      rep.command = "rigidity";
      const HiggsType h(hf.p, hf.q, hf.a, hf.b, g);
      rep.inputs = to_json(h);
      const RigidityReport r = rigidity(h);
      rep.outputs = to_json(r);
      if (r.applies) {
        rep.citations.insert(cite::rigidity);
        if (r.transposed_form_mismatch) rep.warnings.push_back(kRigidityWarning);
      }
    } else if (*morse) {
      rep.command = "morse";
      const HodgeChain c(parse_int_list(ranks_text, "--ranks"), parse_int_list(degrees_text, "--degrees"));
      rep.inputs = Json{{"ranks", c.ranks()}, {"degrees", c.degrees()}, {"g", g}};
      require_genus(g);
      Json uk = Json::array();
      for (Int k = -(c.length() - 1); k <= c.length() - 1; ++k) {
        Json row = to_json(uk_profile(c, k));
        row["k"] = k;
        uk.push_back(row);
      }
      rep.outputs["uk"] = uk;
      Json h1 = Json::array();
      if (k_opt) {
        rep.inputs["k"] = *k_opt;
        h1.push_back(Json{{"k", *k_opt}, {"dim", dim_h1_weight(c, *k_opt, g)}});
      } else {
        for (Int k = 0; 2 * k < c.length(); ++k)
          h1.push_back(Json{{"k", k}, {"dim", dim_h1_weight(c, k, g)}});
      }
      rep.outputs["h1_weight"] = h1;
      const MorseIndex mi = morse_index(c, g);
      rep.outputs["morse_index"] = to_json(mi);
      rep.warnings.push_back("chain realizability as a stable critical point is not checked");
      if (mi.negative_advisory)
        rep.warnings.push_back("negative index: this chain is not a smooth stable critical point");
    } else if (*census) {
      rep.command = "census";
      rep.inputs = Json{{"p", cp}, {"q", cq}, {"g", g}};
      rep.outputs["region"] = to_json(enumerate_region(cp, cq, g));
      rep.outputs["tau_quotient"] = to_json(tau_quotient_facts(cp, cq));
      rep.outputs["coprime_partition"] = to_json(coprime_partition(cp, cq, g));
      if (a_opt.has_value() != b_opt.has_value())
        throw std::invalid_argument("--a/--b: give both or neither");
      if (a_opt) {
        rep.inputs["a"] = *a_opt;
        rep.inputs["b"] = *b_opt;
        rep.outputs["in_region"] = omega_membership(cp, cq, g, *a_opt, *b_opt);
        rep.outputs["canonical"] = to_json(canonicalize(cp, cq, g, *a_opt, *b_opt));
      }
    } else if (*classify_cmd) {
      rep.command = "classify";
      const HiggsType h(hf.p, hf.q, hf.a, hf.b, g);
      rep.inputs = to_json(h);
      const Verdict v = classify(h);
      rep.outputs = to_json(v);
      collect_citations(v.citations, rep.citations);
      collect_citations(v.r_gamma.citations, rep.citations);
      collect_citations(v.r_pu.citations, rep.citations);
      if (v.rigidity_data && v.rigidity_data->transposed_form_mismatch)
        rep.warnings.push_back(kRigidityWarning);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const Json report = rep.json();
  if (json)
    out << report.dump(2) << '\n';
  else
    out << render_table(report);
  return 0;
}

}  // namespace upq
