#pragma once

#include <string_view>

#include <json.hpp>

#include "chorex/fairness.hpp"
#include "chorex/model.hpp"

namespace chorex {

using Json = nlohmann::ordered_json;

// Exact number: rational string or plain JSON integer; floats are rejected
// (what names the field in the error message).
Rational number_from_json(const Json& j, const char* what);

// Parse text as JSON; SchemaError on malformed input.
Json parse_doc(std::string_view text);

// Document shape:
//   {"n": 2, "densities": [[[{"lo":"0","hi":"1/2","a":"3/4","b":"0"}, ...] ...] ...]}
// densities[i][j] is agent i's density for holder j; "b" defaults to "0".
// All numbers are exact rational strings (plain JSON integers also accepted).
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& doc,
                            Instance::Normalization policy = Instance::Normalization::Require,
                            std::vector<Rational>* scales_out = nullptr);
Instance parse_instance(std::string_view text,
                        Instance::Normalization policy = Instance::Normalization::Require,
                        std::vector<Rational>* scales_out = nullptr);

// {"pieces": [[{"lo":"0","hi":"1/2"}], ...]}; parsed pieces are canonicalized.
Json allocation_to_json(const Allocation& alloc);
Allocation allocation_from_json(const Json& doc);
Allocation parse_allocation(std::string_view text);

Json violation_to_json(const Violation& v);        // agents 1-based in documents
Json verdict_to_json(const FairnessVerdict& v);
Json report_to_json(const FairnessReport& rep);
Json validity_to_json(const ValidityReport& rep);

}  // namespace chorex
