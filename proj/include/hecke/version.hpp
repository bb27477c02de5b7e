#pragma once

namespace hecke {
inline constexpr const char* version = "0.1.0";
}
