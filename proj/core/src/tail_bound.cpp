#include "qseries/tail_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qseries/error.hpp"

namespace qseries {

namespace {
constexpr double kLn10 = 2.302585092994046;
}

double tail_bound_log10(const TailMajorant& t, std::size_t terms) {
  const double first = static_cast<double>(terms) + 1.0;
  if (t.beta * first < t.min_exponent) return std::numeric_limits<double>::infinity();
  // Successive summands beyond N shrink at least by r.
  const double log_r = std::max(t.m, 0) * std::log1p(1.0 / first) - t.beta;
  if (log_r >= 0.0) return std::numeric_limits<double>::infinity();
  const double r = std::exp(log_r);
  return t.log10_c + t.m * std::log10(first) - t.beta * first / kLn10 - std::log10(1.0 - r);
}

std::size_t truncation_index(const TailMajorant& t, double target_digits) {
  if (!(t.beta > 0.0)) throw InvalidArgument("tail bound requires beta > 0");
  const auto ok = [&](std::size_t n) { return tail_bound_log10(t, n) < -target_digits; };
  std::size_t hi = 1;
  while (!ok(hi)) {
    if (hi > (std::size_t{1} << 40)) throw PrecisionTooLow("series truncation index out of range");
    hi *= 2;
  }
  std::size_t lo = hi / 2;
  while (lo + 1 < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid; else lo = mid;
  }
  return hi;
}

}  // namespace qseries
