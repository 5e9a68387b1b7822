#pragma once

namespace polarsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace polarsim
