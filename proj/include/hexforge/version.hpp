#pragma once

namespace hexforge {
inline constexpr const char* kVersion = "1.0.0";
}
