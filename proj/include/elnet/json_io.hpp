#pragma once

#include <json.hpp>

#include "elnet/mat.hpp"
#include "elnet/network.hpp"

namespace elnet {

nlohmann::json mat_to_json(const Mat& m);
Mat mat_from_json(const nlohmann::json& j);

nlohmann::json network_to_json(const Network& n);
Network network_from_json(const nlohmann::json& j);

}  // namespace elnet
