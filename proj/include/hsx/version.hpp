#pragma once

namespace hsx {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hsx
