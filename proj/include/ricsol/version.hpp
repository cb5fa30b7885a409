#pragma once

namespace ricsol {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ricsol
