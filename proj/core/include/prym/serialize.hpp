#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "prym/cyclic.hpp"
#include "prym/intersection.hpp"

namespace prym {

using Json = nlohmann::ordered_json;

// {"g": .., "case": "g"|"1g-1", "match": .., "mather": [{"r", "coefficient",
//  "binomial_check"}...], "derived_class": .., "closed_form": ..}
// Rationals serialize as canonical "p/q" strings, classes in canonical text
// form, so reruns are byte-identical.
Json pipeline_report_json(const PipelineReport& rep);

Json stratum_json(const StratumDescriptor& s);
Json strata_json(const std::vector<StratumDescriptor>& list);

std::string mather_csv(const PipelineReport& rep);
std::string mather_text(const PipelineReport& rep);

}  // namespace prym
