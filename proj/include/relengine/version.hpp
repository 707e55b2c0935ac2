#pragma once

#include <string_view>

namespace relengine {

inline constexpr std::string_view kToolName = "relengine";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace relengine
