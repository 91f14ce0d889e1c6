#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "upq/morse.hpp"

using upq::HodgeChain;
using upq::Int;
using upq::UkProfile;

TEST_CASE("chain validation") {
  CHECK_THROWS_AS(HodgeChain({}, {}), std::domain_error);
  CHECK_THROWS_AS(HodgeChain({1, 1}, {0}), std::domain_error);
  CHECK_THROWS_AS(HodgeChain({1, 0}, {0, 0}), std::domain_error);
}

TEST_CASE("U_k profile") {
  const HodgeChain c({1, 1, 1}, {2, 1, 0});
  CHECK(upq::uk_profile(c, 2) == UkProfile{1, -2});
  CHECK(upq::uk_profile(c, 0).degree == 0);
  CHECK(upq::uk_profile(c, 3) == UkProfile{0, 0});
}

TEST_CASE("U_k bookkeeping identities on random chains") {
  oracle::Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const Int m = rng.uniform(1, 6);
    std::vector<Int> r, e;
    Int total = 0;
    for (Int j = 0; j < m; ++j) {
      r.push_back(rng.uniform(1, 4));
      e.push_back(rng.uniform(-10, 10));
      total += r.back();
    }
    const HodgeChain c(r, e);
    Int rk = 0, deg = 0;
    for (Int k = -m; k <= m; ++k) {
      const UkProfile u = upq::uk_profile(c, k), v = upq::uk_profile(c, -k);
      CHECK(u.rank == v.rank);
      CHECK(u.degree == -v.degree);
      rk += u.rank;
      deg += u.degree;
    }
    CHECK(rk == total * total);
    CHECK(deg == 0);
    CHECK(upq::uk_profile(c, 0).degree == 0);
    // weights with 2k >= m have no summands
    for (Int k = 1; k <= m + 1; ++k)
      if (2 * k >= m) CHECK(upq::dim_h1_weight(c, k, 2) == 0);
  }
}

TEST_CASE("weight H^1 dimensions") {
  CHECK(upq::dim_h1_weight(HodgeChain({1, 1}, {0, 0}), 0, 2) == 4);
  CHECK(upq::dim_h1_weight(HodgeChain({1, 1, 1}, {2, 1, 0}), 1, 2) == 3);
  CHECK_THROWS_AS(upq::dim_h1_weight(HodgeChain({1}, {0}), -1, 2), std::domain_error);
}

TEST_CASE("Morse index") {
  oracle::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const HodgeChain c({rng.uniform(1, 5), rng.uniform(1, 5)}, {rng.uniform(-9, 9), rng.uniform(-9, 9)});
    CHECK(upq::morse_index(c, rng.uniform(2, 6)).complex_dim == 0);
  }
  auto m = upq::morse_index(HodgeChain({1, 1, 1}, {2, 1, 0}), 2);
  CHECK(m.complex_dim == 3);
  CHECK(m.real_index == 6);
  CHECK_FALSE(m.negative_advisory);
  auto n = upq::morse_index(HodgeChain({1, 1, 1}, {0, 1, 2}), 2);
  CHECK(n.complex_dim == -1);
  CHECK(n.negative_advisory);
}
