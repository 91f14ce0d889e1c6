#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "upq/classifier.hpp"

using upq::HiggsType;
using upq::Int;
using upq::Tri;
using upq::Verdict;

namespace {

std::vector<std::pair<std::string, Tri>> fields(const Verdict& v) {
  return {{"stable_nonempty", v.stable_nonempty},
          {"closure_of_stable_connected", v.closure_of_stable_connected},
          {"full_space_nonempty", v.full_space_nonempty},
          {"full_space_connected", v.full_space_connected},
          {"full_space_smooth_expected_dim", v.full_space_smooth_expected_dim}};
}

bool same_verdict(const Verdict& x, const Verdict& y) {
  return x.toledo.tau == y.toledo.tau && x.regime == y.regime && x.in_range == y.in_range &&
         x.coprime == y.coprime && fields(x) == fields(y) &&
         x.stable_smooth_dim == y.stable_smooth_dim && x.rigid == y.rigid &&
         x.citations == y.citations && x.r_gamma.smooth_expected_dim == y.r_gamma.smooth_expected_dim;
}

}  // namespace

TEST_CASE("anchors") {
  auto v = upq::classify(HiggsType(2, 3, 1, 1, 2));
  CHECK(v.in_range);
  CHECK(v.stable_nonempty == Tri::yes);
  CHECK(*v.stable_smooth_dim == 26);
  for (const auto& [name, t] : fields(v)) CHECK_MESSAGE(t == Tri::yes, name);

  auto r = upq::classify(HiggsType(1, 2, 2, 1, 2));
  CHECK(r.rigid);
  CHECK(r.stable_nonempty == Tri::no);
  CHECK(r.full_space_nonempty == Tri::yes);
  CHECK(r.full_space_connected == Tri::yes);
  REQUIRE(r.rigidity_data.has_value());
  CHECK(*r.rigidity_data->factor1 == HiggsType(1, 1, 2, 0, 2));
  CHECK(r.rigidity_data->factor2->rank == 1);
  CHECK(r.rigidity_data->factor2->degree == 1);

  auto e = upq::classify(HiggsType(1, 1, 2, 0, 2));
  CHECK_FALSE(e.rigid);
  CHECK(e.regime == "maximal_equal_rank");
  CHECK(e.stable_nonempty == Tri::yes);
  CHECK(e.full_space_nonempty == Tri::yes);
  CHECK(e.full_space_connected == Tri::yes);
}

TEST_CASE("regimes") {
  auto out = upq::classify(HiggsType(1, 1, 3, 0, 2));
  CHECK_FALSE(out.in_range);
  for (const auto& [name, t] : fields(out)) CHECK_MESSAGE(t == Tri::no, name);
  CHECK(out.r_gamma.nonempty == Tri::no);

  auto zero = upq::classify(HiggsType(2, 2, 1, 1, 2));
  CHECK(zero.regime == "tau_zero");
  CHECK(zero.stable_nonempty == Tri::unknown);
  CHECK(zero.full_space_nonempty == Tri::yes);
  CHECK(zero.full_space_connected == Tri::yes);
  CHECK_FALSE(zero.stable_smooth_dim.has_value());

  // non-coprime, 0 < |tau| < tau_M, p != q: full connectivity unproved
  auto open = upq::classify(HiggsType(1, 3, 1, 1, 3));
  CHECK(open.regime == "generic");
  CHECK_FALSE(open.coprime);
  CHECK(open.full_space_connected == Tri::unknown);
  CHECK(open.closure_of_stable_connected == Tri::yes);

  // p = q window (p-1)(2g-2) < |tau| < tau_M without coprimality: tau = 6 in (4, 8)
  auto win = upq::classify(HiggsType(2, 2, 3, -3, 3));
  CHECK(win.toledo.tau == upq::Rational(6));
  CHECK_FALSE(win.coprime);
  CHECK(win.full_space_connected == Tri::yes);
  CHECK(win.citations.at("full_space_connected") == upq::cite::equal_rank_large_toledo);
}

TEST_CASE("verdict invariants over a sweep") {
  for (Int p = 1; p <= 3; ++p)
    for (Int q = 1; q <= 3; ++q)
      for (Int g = 2; g <= 3; ++g)
        for (Int a = -8; a <= 8; ++a)
          for (Int b = -8; b <= 8; ++b) {
            const HiggsType h(p, q, a, b, g);
            const Verdict v = upq::classify(h);
            for (const auto& [name, t] : fields(v))
              CHECK_MESSAGE(v.citations.count(name) == 1, name);
            if (!v.in_range)
              for (const auto& [name, t] : fields(v)) CHECK(t == Tri::no);
            if (v.coprime && v.in_range)
              for (const auto& [name, t] : fields(v)) CHECK(t != Tri::unknown);
            if (v.stable_smooth_dim) CHECK(*v.stable_smooth_dim == upq::expected_dim(h));
            CHECK(v.rigid == (p != q && v.toledo.saturated));
            if (v.rigid) CHECK(v.stable_nonempty == Tri::no);
            CHECK(v.r_pu.smooth_expected_dim == Tri::unknown);
            CHECK_FALSE(v.r_pu.smooth_dim.has_value());
            CHECK(same_verdict(v, upq::classify(HiggsType(p, q, a + 2 * p, b + 2 * q, g))));
            CHECK(same_verdict(v, upq::classify(HiggsType(p, q, a - p, b - q, g))));
          }
}
