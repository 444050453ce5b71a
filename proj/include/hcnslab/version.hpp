#pragma once

namespace hcns {
inline constexpr const char* kVersion = "0.1.0";
}
