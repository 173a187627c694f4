#pragma once

namespace mwspin {

inline constexpr const char* kVersion = "0.1.0";

}
