#pragma once

namespace cpnet {

inline constexpr const char* version = "0.1.0";

}  // namespace cpnet
