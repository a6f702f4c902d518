#pragma once

namespace fht {

inline constexpr const char* kToolVersion = "1.0.0";

} // namespace fht
