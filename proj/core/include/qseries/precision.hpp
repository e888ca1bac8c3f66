#pragma once

#include <mpfr.h>

namespace qseries {

/// Target decimal precision plus guard digits. Every real produced under a
/// context is accurate to 10^-decimal_digits in absolute terms.
class PrecisionContext {
 public:
  static constexpr int kMinGuardDigits = 10;

  PrecisionContext(int decimal_digits, int guard_digits);

  int decimal_digits() const noexcept { return decimal_digits_; }
  int guard_digits() const noexcept { return guard_digits_; }
  int working_digits() const noexcept { return decimal_digits_ + guard_digits_; }

  /// MPFR precision in bits for the working digits.
  mpfr_prec_t bits() const noexcept { return bits_for_digits(working_digits()); }

  /// Same guard, different target digits.
  PrecisionContext with_digits(int decimal_digits) const;

  static mpfr_prec_t bits_for_digits(double digits) noexcept;

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int decimal_digits_;
  int guard_digits_;
};

/// 20 guard digits up to 500 target digits, 50 above.
int default_guard_digits(int decimal_digits) noexcept;

PrecisionContext make_context(int decimal_digits, int guard_digits);
PrecisionContext make_context(int decimal_digits);

}  // namespace qseries
