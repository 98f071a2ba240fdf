#pragma once

#include "json.hpp"

#include "gfh/equations.hpp"

namespace gfh::detail {

using Json = nlohmann::ordered_json;

Json model_to_json(const CurveModel& model);
CurveModel model_from_json(const Json& j);
Json weil_to_json(const WeilModel& model);

}  // namespace gfh::detail
