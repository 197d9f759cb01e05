#pragma once

namespace spindyn {

inline constexpr const char* kVersion = "0.1.0";

} // namespace spindyn
