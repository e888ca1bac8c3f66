#pragma once

#include <vector>

#include "qseries/precision.hpp"
#include "qseries/rational.hpp"
#include "qseries/real.hpp"

namespace qseries {

/// Radix expansion of a fractional part: y_n = floor(base x_n),
/// x_{n+1} = frac(base x_n).
class ExpansionState {
 public:
  /// Requires base > 1 and 0 <= x0 < 1.
  ExpansionState(Real x0, Real base);

  BigInt step();

  const Real& remainder() const noexcept { return x_; }
  const Real& base() const noexcept { return base_; }
  std::size_t digits_emitted() const noexcept { return emitted_; }

 private:
  Real x_;
  Real base_;
  std::size_t emitted_ = 0;
};

/// First `count` base-`base` digits of x0 (0 <= x0 < 1). Rejects contexts
/// with fewer than count * log10(base) + 50 digits, and values carrying less
/// precision than the context.
std::vector<BigInt> digit_expand(const Real& x0, const Real& base, std::size_t count, const PrecisionContext& ctx);

inline constexpr std::size_t kMaxExpansionCount = 205;
inline constexpr int kExpansionMinDigits = 2800;

/// p(0), ..., p(count) read off frac(F(10)) in base e^(10 pi); the integer
/// part is p(0). Needs count <= 205 and a context of at least 2800 digits
/// (raised internally to what digit_expand requires).
std::vector<BigInt> partitions_by_expansion(std::size_t count, const PrecisionContext& ctx);

/// Leading-order asymptotic for p(n), n >= 2:
///   A_n exp(pi sqrt(2/3 (n - 1/24))),
///   A_n = (pi / sqrt(6 m) - 1 / (2 m^(3/2))) / (2 n sqrt 2),  m = (n - 1) / 24.
Real hr_estimate(long n, const PrecisionContext& ctx);

}  // namespace qseries
