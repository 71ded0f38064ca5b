#pragma once

namespace nlosc {

inline constexpr const char* library_name = "nlosc";
inline constexpr const char* library_version = "1.0.0";

}  // namespace nlosc
