#pragma once

namespace ooc {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kJsonSchemaVersion = 1;

}  // namespace ooc
