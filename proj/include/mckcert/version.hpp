#pragma once

namespace mck {

inline constexpr const char* kVersion = "0.1.0";

} // namespace mck
