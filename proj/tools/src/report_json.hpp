#ifndef KOSZULKIT_TOOLS_REPORT_JSON_HPP
#define KOSZULKIT_TOOLS_REPORT_JSON_HPP

#include "koszulkit/report.hpp"
#include "koszulkit/resolution.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace koszulkit::cli {

using Json = nlohmann::ordered_json;

// {"text": ..., "fiber": [a, b, ...], "vector": ["p/q", ...]}. The fiber is
// the first parenthesized integer tuple in the text, the vector the last
// bracketed list; both are omitted when absent.
Json witness_json(const std::string& text);
Json witness_json(const std::string& text, FiberKey fiber);

Json checks_json(const ConditionReport& r);
Json check_json(const ConditionCheck& c);
Json fiber_dims_json(const std::map<FiberKey, int>& dims);
Json steps_json(const std::vector<StepReport>& steps);

}  // namespace koszulkit::cli

#endif
