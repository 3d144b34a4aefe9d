#pragma once

namespace krlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace krlab
