#ifndef NOMAMEC_SRC_NUMERIC_HPP
#define NOMAMEC_SRC_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <limits>

namespace nomamec::detail {

/// ln(e^x - 1) for x > 0 without overflowing for large x.
inline double log_expm1(double x) {
  if (x > 30.0) return x + std::log1p(-std::exp(-x));
  return std::log(std::expm1(x));
}

/// ln(e^a + e^b); either argument may be -inf.
inline double log_add_exp(double a, double b) {
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  if (hi == -std::numeric_limits<double>::infinity()) return hi;
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace nomamec::detail

#endif  // NOMAMEC_SRC_NUMERIC_HPP
