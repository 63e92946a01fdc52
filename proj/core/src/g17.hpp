#pragma once

#include <cstdio>
#include <string>

namespace gbx::detail {

// Shortest round-trippable decimal form, 17 significant digits.
inline std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace gbx::detail
