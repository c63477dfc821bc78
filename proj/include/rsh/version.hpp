#pragma once

namespace rsh {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rsh
