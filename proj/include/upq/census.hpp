#pragma once

// Component labels [a,b] in (Z + Z)/(p,q)Z for PU(p,q)-representations of a
// genus g surface group, and the half-open fundamental region that picks one
// representative per label.

#include <map>
#include <vector>

#include "upq/rational.hpp"

namespace upq {

struct ClassPair {
  Int a = 0;
  Int b = 0;
  bool canonical = false;
  friend bool operator==(const ClassPair& x, const ClassPair& y) { return x.a == y.a && x.b == y.b; }
};

struct CensusReport {
  Int p = 0, q = 0, g = 0;
  Int k = 0;               // GCD(p, q)
  Int count = 0;
  Int expected_count = 0;  // 2(p+q) min(p,q)(g-1) + GCD(p,q)
  std::vector<ClassPair> points;
  std::vector<ClassPair> coprime_points;  // GCD(p+q, a+b) = 1
  std::map<Int, std::vector<ClassPair>> lines;  // t -> points with aq - bp = t k
};

// Integer points of the L-shaped region
//   |aq - bp| <= (p+q) min(p,q) (g-1), and
//   (0 <= a <= p and b <= q) or (0 <= b <= q and a <= p),
// excluding the rays a = p (b <= q) and b = q (a <= p).
bool omega_membership(Int p, Int q, Int g, Int a, Int b);

// The representative of (a + l p, b + l q) inside the region. Throws
// std::domain_error if |tau(a,b)| > tau_M (the class labels no component).
ClassPair canonicalize(Int p, Int q, Int g, Int a, Int b);

CensusReport enumerate_region(Int p, Int q, Int g);

struct TauQuotientFacts {
  Int k = 0;
  Rational image_lattice_step;  // tau takes values in (2k/(p+q)) Z
  Int kernel_size = 0;          // k
  Int generator_a = 0;          // kernel generated by [p/k, q/k]
  Int generator_b = 0;
};

TauQuotientFacts tau_quotient_facts(Int p, Int q);

struct CoprimePartition {
  std::vector<ClassPair> coprime;
  std::vector<ClassPair> non_coprime;
  bool both_nonempty = false;
};

CoprimePartition coprime_partition(Int p, Int q, Int g);

}  // namespace upq
