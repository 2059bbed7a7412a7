#pragma once

namespace ecom {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ecom
