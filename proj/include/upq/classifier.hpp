#pragma once

// Verdicts on the moduli space M(a,b) of U(p,q)-Higgs bundles, the U(p,q)
// representation space R_Gamma(a,b) and the PU(p,q) component R[a,b].
// "unknown" means no proof is available, not that the answer is negative.

#include <map>
#include <optional>
#include <string>

#include "upq/higgs_bridge.hpp"

namespace upq {

enum class Tri { yes, no, unknown };
const char* to_string(Tri t);

// Named results a verdict field can rest on. Descriptions live in citation_text().
namespace cite {
inline constexpr const char* milnor_wood = "milnor-wood-bound";
inline constexpr const char* toledo_zero = "toledo-zero-connected";
inline constexpr const char* toledo_zero_stable_open = "toledo-zero-stable-open";
inline constexpr const char* general_toledo = "general-toledo-stable-locus";
inline constexpr const char* coprime = "coprime-connected-smooth";
inline constexpr const char* equal_rank_large_toledo = "equal-rank-large-toledo-connected";
inline constexpr const char* equal_rank_maximal = "equal-rank-maximal-toledo";
inline constexpr const char* rigidity = "maximal-toledo-rigidity";
inline constexpr const char* maximal_connected = "maximal-toledo-connected";
inline constexpr const char* connectedness_open = "full-connectedness-open";
inline constexpr const char* correspondence = "higgs-representation-correspondence";
inline constexpr const char* adjoint_fibration = "adjoint-fibration";
}  // namespace cite

const char* citation_text(const std::string& tag);

struct RepresentationVerdict {
  Tri irreducible_nonempty = Tri::unknown;
  Tri irreducible_closure_connected = Tri::unknown;
  Tri nonempty = Tri::unknown;
  Tri connected = Tri::unknown;
  Tri smooth_expected_dim = Tri::unknown;  // never asserted for R[a,b]
  std::optional<Int> smooth_dim;
  std::map<std::string, std::string> citations;
};

struct Verdict {
  HiggsType input;
  Toledo toledo;
  std::string regime;  // out_of_range, tau_zero, generic, maximal_equal_rank, maximal_rigid
  bool in_range = false;
  Tri stable_nonempty = Tri::unknown;
  std::optional<Int> stable_smooth_dim;
  Tri closure_of_stable_connected = Tri::unknown;
  Tri full_space_nonempty = Tri::unknown;
  Tri full_space_connected = Tri::unknown;
  Tri full_space_smooth_expected_dim = Tri::unknown;
  bool rigid = false;
  std::optional<RigidityReport> rigidity_data;
  bool coprime = false;
  std::map<std::string, std::string> citations;  // field -> tag
  RepresentationVerdict r_gamma;
  RepresentationVerdict r_pu;
};

Verdict classify(const HiggsType& h);

}  // namespace upq
