#include "qseries/precision.hpp"

#include <cmath>
#include <string>

#include "qseries/error.hpp"

namespace qseries {

namespace {
constexpr double kLog2Of10 = 3.321928094887362;
}

PrecisionContext::PrecisionContext(int decimal_digits, int guard_digits)
    : decimal_digits_(decimal_digits), guard_digits_(guard_digits) {
  if (decimal_digits < 1) {
    throw InvalidArgument("decimal_digits must be positive, got " + std::to_string(decimal_digits));
  }
  if (guard_digits < kMinGuardDigits) {
    throw InvalidArgument("guard_digits must be at least " + std::to_string(kMinGuardDigits) +
                          ", got " + std::to_string(guard_digits));
  }
}

PrecisionContext PrecisionContext::with_digits(int decimal_digits) const {
  return {decimal_digits, guard_digits_};
}

mpfr_prec_t PrecisionContext::bits_for_digits(double digits) noexcept {
  // A few spare bits so that "d digits" never rounds down to fewer.
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 8;
}

int default_guard_digits(int decimal_digits) noexcept { return decimal_digits <= 500 ? 20 : 50; }

PrecisionContext make_context(int decimal_digits, int guard_digits) {
  return {decimal_digits, guard_digits};
}

PrecisionContext make_context(int decimal_digits) {
  return {decimal_digits, default_guard_digits(decimal_digits)};
}

}  // namespace qseries
