#include "qseries/hunt.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "qseries/arith.hpp"
#include "qseries/error.hpp"
#include "qseries/parallel.hpp"
#include "qseries/series.hpp"

namespace qseries {

namespace {

double distance_digits(const Real& distance, int max_digits) {
  if (distance.is_zero()) return max_digits;
  return std::clamp(-distance.log10_abs(), 0.0, static_cast<double>(max_digits));
}

std::optional<NearHit> measure(int s, const Rational& f, double threshold, const PrecisionContext& ctx) {
  NearHit hit;
  hit.farey_point = f;
  hit.alpha = 2 * f;
  hit.s = s;
  hit.value = lambert(s, hit.alpha, ctx);
  auto [nearest, digits] = nearness(hit.value, ctx.decimal_digits());
  if (digits < threshold) return std::nullopt;
  hit.nearest = std::move(nearest);
  hit.nearness_digits = digits;
  return hit;
}

}  // namespace

std::pair<Rational, double> nearness(const Real& x, int max_digits) {
  const Rational integer(nearest_integer(x));
  const double integer_digits = distance_digits(x - Real(integer, x.precision()), max_digits);
  RationalApproximation best = nearest_rational(x, kHuntMaxDenominator);
  const double rational_digits = distance_digits(best.distance, max_digits);
  if (rational_digits > integer_digits) return {std::move(best.fraction), rational_digits};
  return {integer, integer_digits};
}

std::vector<NearHit> hunt_near_integers(int s, long farey_order, double threshold_digits,
                                        const PrecisionContext& ctx, unsigned threads) {
  if (s != -3 && s != -7 && s != -11) {
    throw InvalidArgument("hunt exponent must be -3, -7 or -11, got " + std::to_string(s));
  }
  if (farey_order < 1) throw InvalidArgument("farey order must be >= 1");
  if (threshold_digits >= ctx.decimal_digits()) {
    throw InvalidArgument("threshold must be below the context precision");
  }

  const std::vector<Rational> points = farey(farey_order);
  const int screen_digits = std::min(ctx.decimal_digits(), std::max(static_cast<int>(threshold_digits) + 15, 30));
  const PrecisionContext screen = ctx.with_digits(screen_digits);

  const auto screened = parallel_map<std::optional<NearHit>>(points.size(), threads, [&](std::size_t i) {
    return measure(s, points[i], threshold_digits, screen);
  });

  std::vector<Rational> survivors;
  for (const auto& hit : screened) {
    if (hit) survivors.push_back(hit->farey_point);
  }

  const auto final_hits = parallel_map<std::optional<NearHit>>(survivors.size(), threads, [&](std::size_t i) {
    return measure(s, survivors[i], threshold_digits, ctx);
  });

  std::vector<NearHit> out;
  for (const auto& hit : final_hits) {
    if (hit) out.push_back(*hit);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const NearHit& a, const NearHit& b) { return a.nearness_digits > b.nearness_digits; });
  return out;
}

}  // namespace qseries
