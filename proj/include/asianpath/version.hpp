#pragma once

namespace asianpath {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace asianpath
