#pragma once

namespace merf {

inline constexpr double kSqrtPi = 1.7724538509055160273;

}  // namespace merf
