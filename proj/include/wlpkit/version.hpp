#pragma once

#define WLPKIT_VERSION "0.1.0"

namespace wlpkit {

inline constexpr const char* kVersion = WLPKIT_VERSION;

}  // namespace wlpkit
