// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "json.hpp"
#include "lexshift/stats.hpp"

namespace lexshift::detail {

nlohmann::json to_json_value(const PlacementModel& model);
PlacementModel placement_model_from_value(const nlohmann::json& value, const std::string& field);

}  // namespace lexshift::detail
