#pragma once

namespace semiflat {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace semiflat
