#pragma once

namespace capsula {

inline constexpr const char* kToolName = "capsula";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kInterpreterName = "capsula-minilang";

} // namespace capsula
