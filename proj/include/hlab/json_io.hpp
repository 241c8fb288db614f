#pragma once

#include <json.hpp>

#include "hlab/alien.hpp"
#include "hlab/equivalence.hpp"
#include "hlab/fuzz.hpp"
#include "hlab/herbrand.hpp"
#include "hlab/sld.hpp"
#include "hlab/syntax.hpp"

namespace hlab {

using json = nlohmann::ordered_json;

json to_json(const Verdict& v);
json to_json(const Subst& s);
json to_json(const SldResult& r);
json to_json(const std::vector<AlienOccurrences>& aliens);
json to_json(const GeneralizationResult& g);
json to_json(const ModelApprox& m);
json to_json(const ConditionReport& c);
json to_json(const EquivalenceReport& r);
json to_json(const GeneralizationCheck& g);
json to_json(const Counterexample& c);
json to_json(const FuzzCase& c);
json to_json(const CampaignReport& r);

}  // namespace hlab
