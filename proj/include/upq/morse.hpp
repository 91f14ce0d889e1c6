#pragma once

// Bookkeeping at a Hodge-chain fixed point E = F_1 + ... + F_m. These are plain
// formula evaluations: nothing checks that the chain is realizable as a stable
// critical point (alternation between V and W, nonvanishing Higgs components).

#include <vector>

#include "upq/rational.hpp"

namespace upq {

class HodgeChain {
 public:
  // Throws std::domain_error on empty chains, mismatched lengths or ranks < 1.
  HodgeChain(std::vector<Int> ranks, std::vector<Int> degrees);

  Int length() const { return static_cast<Int>(ranks_.size()); }
  const std::vector<Int>& ranks() const { return ranks_; }
  const std::vector<Int>& degrees() const { return degrees_; }

 private:
  std::vector<Int> ranks_;
  std::vector<Int> degrees_;
};

struct UkProfile {
  Int rank = 0;
  Int degree = 0;
  friend bool operator==(const UkProfile&, const UkProfile&) = default;
};

// U_k = sum over i - j = k of Hom(F_j, F_i); zero for |k| >= m.
UkProfile uk_profile(const HodgeChain& c, Int k);

// dim H^1 of the weight-2k deformation complex U_2k -> U_2k+1 (x) K, k >= 0.
Int dim_h1_weight(const HodgeChain& c, Int k, Int g);

struct MorseIndex {
  Int complex_dim = 0;
  Int real_index = 0;
  bool negative_advisory = false;  // negative: chain is not a stable critical point
};

MorseIndex morse_index(const HodgeChain& c, Int g);

}  // namespace upq
