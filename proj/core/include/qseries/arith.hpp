#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qseries/rational.hpp"
#include "qseries/real.hpp"

namespace qseries {

/// Divisor power sum sigma_k(n) = sum_{d | n} d^k. k must be one of 1, 3, 7, 11.
BigInt sigma_pow(int k, std::int64_t n);

/// [sigma_k(1), ..., sigma_k(N)] by a divisor sieve (entry i-1 holds sigma_k(i)).
std::vector<BigInt> sigma_table(int k, std::int64_t count);

/// Shared, lazily grown sigma_k table with at least `count` entries.
/// Safe to call from several threads; returned tables are immutable.
std::shared_ptr<const std::vector<BigInt>> cached_sigma_table(int k, std::int64_t count);

/// p(0), ..., p(N) from Euler's pentagonal-number recurrence, exact.
std::vector<BigInt> partition_oracle(std::int64_t n);

/// Euler totient.
std::int64_t totient(std::int64_t n);

/// Reduced fractions p/q with 1 <= p <= q <= order, ascending.
std::vector<Rational> farey(std::int64_t order);

struct RationalApproximation {
  Rational fraction;
  Real distance;
};

/// Best approximation with denominator <= max_denominator, found through the
/// continued-fraction convergents and the final semiconvergent. Ties prefer
/// the smaller denominator.
RationalApproximation nearest_rational(const Real& x, std::int64_t max_denominator);

}  // namespace qseries
