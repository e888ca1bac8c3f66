#include "qseries/partition.hpp"

#include <cmath>
#include <numbers>

#include "qseries/error.hpp"
#include "qseries/series.hpp"

namespace qseries {

ExpansionState::ExpansionState(Real x0, Real base) : x_(std::move(x0)), base_(std::move(base)) {
  if (!(base_ > Real(1, base_.precision()))) throw InvalidArgument("expansion base must exceed 1");
  if (x_.sign() < 0 || !(x_ < Real(1, x_.precision()))) throw InvalidArgument("expansion start must lie in [0, 1)");
}

BigInt ExpansionState::step() {
  x_ *= base_;
  BigInt digit = floor_integer(x_);
  x_ = frac(x_);
  ++emitted_;
  return digit;
}

std::vector<BigInt> digit_expand(const Real& x0, const Real& base, std::size_t count, const PrecisionContext& ctx) {
  if (count == 0) throw InvalidArgument("digit count must be positive");
  if (!(base > Real(1, base.precision()))) throw InvalidArgument("expansion base must exceed 1");
  const double needed = static_cast<double>(count) * base.log10_abs() + 50;
  if (needed > ctx.decimal_digits()) {
    throw InvalidArgument("digit_expand needs " + std::to_string(static_cast<long>(std::ceil(needed))) +
                          " digits, context has " + std::to_string(ctx.decimal_digits()));
  }
  if (x0.precision() < ctx.bits() || base.precision() < ctx.bits()) {
    throw InvalidArgument("digit_expand inputs carry less precision than the context");
  }
  ExpansionState state(x0, base);
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(state.step());
  return out;
}

std::vector<BigInt> partitions_by_expansion(std::size_t count, const PrecisionContext& ctx) {
  if (count == 0 || count > kMaxExpansionCount) {
    throw InvalidArgument("expansion count must lie in [1, 205], got " + std::to_string(count));
  }
  if (ctx.decimal_digits() < kExpansionMinDigits) {
    throw InvalidArgument("partition expansion needs at least 2800 digits");
  }
  const double digits_per_term = 10 * std::numbers::pi / std::log(10.0);
  const int needed = static_cast<int>(std::ceil(count * digits_per_term)) + 51;
  const PrecisionContext work = ctx.with_digits(std::max(ctx.decimal_digits(), needed));

  const Real product = euler_F(Rational(10), work);
  const Real base = exp(pi(work.bits()) * 10);

  std::vector<BigInt> out;
  out.reserve(count + 1);
  out.push_back(floor_integer(product));
  for (BigInt& p : digit_expand(frac(product), base, count, work)) out.push_back(std::move(p));
  return out;
}

Real hr_estimate(long n, const PrecisionContext& ctx) {
  if (n < 2) throw InvalidArgument("hr_estimate needs n >= 2 (the amplitude is singular at n = 1)");
  const mpfr_prec_t bits = ctx.bits();
  const Real p = pi(bits);
  Rational m_exact(n - 1, 24);
  m_exact.canonicalize();
  const Real m(m_exact, bits);
  const Real amplitude = (p / sqrt(m * 6) - Real(1, bits) / (pow(m, Rational(3, 2)) * 2)) /
                         (sqrt(Real(2, bits)) * (2 * n));
  const Real shifted = Real(Rational(n), bits) - Real(Rational(1, 24), bits);
  return amplitude * exp(p * sqrt(shifted * Real(Rational(2, 3), bits)));
}

}  // namespace qseries
