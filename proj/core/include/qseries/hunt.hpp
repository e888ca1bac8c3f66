#pragma once

#include <vector>

#include "qseries/precision.hpp"
#include "qseries/rational.hpp"
#include "qseries/real.hpp"

namespace qseries {

struct NearHit {
  Rational farey_point;  ///< f
  Rational alpha;        ///< 2f, the lambert scale
  int s = 0;
  Real value{64};
  Rational nearest;  ///< nearest integer, or nearest rational (denominator <= 1000) when closer
  double nearness_digits = 0.0;  ///< -log10 |value - nearest|
};

inline constexpr long kHuntMaxDenominator = 1000;

/// Nearness of x to its nearest integer and to its best rational
/// approximation with denominator <= kHuntMaxDenominator; the closer wins,
/// ties go to the integer. Capped at `max_digits`.
std::pair<Rational, double> nearness(const Real& x, int max_digits);

/// Evaluates lambert(s, 2f) for every f in the Farey sequence of the given
/// order and returns the points whose nearness reaches threshold_digits,
/// most striking first. s must be -3, -7 or -11. Points are screened at
/// threshold + 15 digits and survivors re-measured under ctx.
std::vector<NearHit> hunt_near_integers(int s, long farey_order, double threshold_digits,
                                        const PrecisionContext& ctx, unsigned threads = 1);

}  // namespace qseries
