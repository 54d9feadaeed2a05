#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace weylbrane::cli {

// Summary (not CSV) formatting: 12 significant digits, with values below
// 1e-12 in magnitude shown as 0 so that e.g. gamma(5/9) reads as 0.
inline std::string show(double x) {
  if (std::isnan(x)) return "nan";
  if (std::abs(x) < 1e-12) return "0";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace weylbrane::cli
