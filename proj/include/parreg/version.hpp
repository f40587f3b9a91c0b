#pragma once

namespace parreg {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace parreg
