#pragma once

// JSON rendering of every result record. Rationals become "num/den" strings,
// integers stay integers; key order is fixed so output is byte-stable.

#include <json.hpp>

#include "upq/census.hpp"
#include "upq/classifier.hpp"
#include "upq/higgs_bridge.hpp"
#include "upq/morse.hpp"
#include "upq/triple_core.hpp"
#include "upq/wall_crossing.hpp"

namespace upq {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const std::optional<Rational>& r);  // null for +infinity / absent
Json to_json(const Invariants& v);
Json to_json(const TripleType& t);
Json to_json(const AlphaInterval& r);
Json to_json(const Thresholds& t);
Json to_json(const BundleModuli& b);
Json to_json(const FibrationDims& f);
Json to_json(const WitnessReport& r);
Json to_json(const WallWitness& w);
Json to_json(const Wall& w);
Json to_json(const CriticalCheck& c);
Json to_json(const IntegerGenericity& g);
Json to_json(const Chamber& c);
Json to_json(const ChamberReport& r);
Json to_json(const FlipDims& f);
Json to_json(const HiggsType& h);
Json to_json(const Toledo& t);
Json to_json(const MinimaRealization& m);
Json to_json(const MwRelations& m);
Json to_json(const RigidityReport& r);
Json to_json(const UkProfile& u);
Json to_json(const MorseIndex& m);
Json to_json(const ClassPair& c);
Json to_json(const CensusReport& r);
Json to_json(const TauQuotientFacts& f);
Json to_json(const CoprimePartition& p);
Json to_json(const RepresentationVerdict& v);
Json to_json(const Verdict& v);

// Two-column "path  value" rendering of a report for terminals.
std::string render_table(const Json& j);

}  // namespace upq
