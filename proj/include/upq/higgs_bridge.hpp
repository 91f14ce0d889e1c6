#pragma once

// U(p,q)-Higgs data V + W with deg V = a, deg W = b on a genus g curve, and its
// translation into triple types.

#include <optional>
#include <string>
#include <vector>

#include "upq/rational.hpp"
#include "upq/triple_core.hpp"

namespace upq {

class HiggsType {
 public:
  // Throws std::domain_error unless p, q >= 1 and g >= 2.
  HiggsType(Int p, Int q, Int a, Int b, Int g);

  Int p() const { return p_; }
  Int q() const { return q_; }
  Int a() const { return a_; }
  Int b() const { return b_; }
  Int g() const { return g_; }
  Int rank() const { return p_ + q_; }
  Int degree() const { return a_ + b_; }

  std::string str() const;
  friend bool operator==(const HiggsType&, const HiggsType&) = default;

 private:
  Int p_, q_, a_, b_, g_;
};

struct Toledo {
  Rational tau;
  Rational tau_M;
  bool within_bound = false;
  bool saturated = false;
};

Rational toledo_invariant(Int p, Int q, Int a, Int b);
Toledo toledo(const HiggsType& h);

// Which Higgs field component vanishes on the minima locus.
enum class Vanishing { gamma_zero, beta_zero, both_zero };
const char* to_string(Vanishing v);

Vanishing vanishing_pattern(const HiggsType& h);

struct MinimaRealization {
  Vanishing case_tag = Vanishing::both_zero;
  TripleType triple;  // (p,q,a+p(2g-2),b) for gamma = 0, (q,p,b+q(2g-2),a) for beta = 0
  std::optional<TripleType> alternate;  // both_zero only: the beta = 0 description
  Rational alpha;     // always 2g - 2
  std::vector<BundleModuli> product;  // both_zero only: M(p,a) x M(q,b)
};

MinimaRealization minima_triple_type(const HiggsType& h);

struct MwRelations {
  TripleType triple;
  Rational two_g_minus_2;
  Rational alpha_m;
  std::optional<Rational> alpha_M;
  Toledo toledo;
  int alpha_m_vs_2g2 = 0;  // sign of alpha_m - (2g-2)
  std::optional<int> alpha_M_vs_2g2;  // sign of alpha_M - (2g-2), p != q
  // Each relation, checked on the computed values.
  bool lower_relation_holds = false;   // 2g-2 >= alpha_m, equality iff tau = 0
  bool upper_relation_holds = false;   // p != q: MW <=> 2g-2 <= alpha_M, saturated <=> equality
                                       // p == q: MW <=> alpha_m >= 0, saturated <=> alpha_m == 0
  std::vector<std::string> facts;
};

MwRelations mw_relations(const HiggsType& h);

Int expected_dim(const HiggsType& h);

struct RigidityReport {
  bool applies = false;  // p != q and |tau| = tau_M
  std::optional<HiggsType> factor1;  // U(m,m)-Higgs summand with maximal Toledo, m = min(p,q)
  std::optional<BundleModuli> factor2;  // polystable bundle of rank |p - q|
  Int dim_sum = 0;           // dimension of factor1 plus dimension of factor2
  Int dim_closed_form = 0;   // 2 + (5m^2 + M^2 - 2mM)(g-1), m = min, M = max
  Int dim_transposed_form = 0;  // 2 + (m^2 + 5M^2 - 2mM)(g-1), transposed variant kept for comparison
  bool transposed_form_mismatch = false;
  Int expected = 0;
  bool below_expected = false;
};

RigidityReport rigidity(const HiggsType& h);

bool coprime_smooth(const HiggsType& h);

}  // namespace upq
