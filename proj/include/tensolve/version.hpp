#pragma once

namespace tensolve {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace tensolve
