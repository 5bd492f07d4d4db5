#pragma once

namespace pbasis {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pbasis
