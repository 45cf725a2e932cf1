#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace pdcm {

/// Shortest decimal text that round-trips to the same double; "nan" for NaN.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace pdcm
