#pragma once

namespace orbitcodes {
inline constexpr const char* kToolName = "orbitcodes";
inline constexpr const char* kVersion = "0.1.0";
}  // namespace orbitcodes
