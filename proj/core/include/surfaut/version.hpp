#pragma once

namespace surfaut {
inline constexpr const char* kToolName = "surfaut";
inline constexpr const char* kToolVersion = "0.1.0";
}  // namespace surfaut
