#pragma once

#include <json.hpp>

#include "perilink/engine.hpp"
#include "perilink/recipes.hpp"

namespace perilink {

using Json = nlohmann::ordered_json;

// Parse errors surface as std::invalid_argument.
Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const ParityWeight& pw);
ParityWeight parity_weight_from_json(const Json& j);

Json to_json(const Reflection& r);
Json to_json(const Move& m);
Move move_from_json(const Json& j);

std::string_view mode_name(EligibilityMode mode);
EligibilityMode mode_from_name(std::string_view name);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const Verification& v);
Json to_json(const IrreducibilityVerdict& v);
Json to_json(const RecipeRow& row);
Json to_json(const RecipeReport& report);
Json to_json(const CensusReport& report);

}  // namespace perilink
