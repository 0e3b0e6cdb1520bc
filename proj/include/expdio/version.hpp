#pragma once

namespace expdio {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace expdio
