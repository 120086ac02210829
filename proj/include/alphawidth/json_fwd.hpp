#pragma once

#include "json.hpp"

namespace alphawidth {
using Json = nlohmann::ordered_json;
}
