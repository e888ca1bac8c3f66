#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "qseries/precision.hpp"
#include "qseries/rational.hpp"

namespace qseries {

/// Arbitrary-precision binary floating-point value (owning mpfr_t).
///
/// Every value carries its own precision in bits. Binary operations round to
/// the larger of the two operand precisions with round-to-nearest, so the
/// same inputs always produce bit-identical results.
class Real {
 public:
  explicit Real(mpfr_prec_t bits);
  explicit Real(const PrecisionContext& ctx) : Real(ctx.bits()) {}
  Real(long value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  Real(const BigInt& value, mpfr_prec_t bits);

  /// Parses a decimal (or scientific) literal, rounded to nearest.
  static Real parse(std::string_view text, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  /// Copy rounded to a different precision.
  Real rounded(mpfr_prec_t bits) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// log10|x| as a double; -inf for zero.
  double log10_abs() const;

  /// Fixed notation with the given number of fractional digits.
  std::string to_fixed(int fraction_digits) const;
  /// Scientific notation with the given number of significant digits.
  std::string to_scientific(int significant_digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator*(long lhs, Real rhs) { return rhs *= lhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  /// Bitwise identity: same precision and same value (including sign of zero).
  bool identical(const Real& other) const;

 private:
  void promote_to(mpfr_prec_t bits);

  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& base, long exponent);
Real pow(const Real& base, const Rational& exponent);
Real agm(const Real& a, const Real& b);
Real floor(const Real& x);
/// x - floor(x), always in [0, 1).
Real frac(const Real& x);
/// Nearest integer (ties away from zero).
BigInt nearest_integer(const Real& x);
BigInt floor_integer(const Real& x);

Real pi(mpfr_prec_t bits);
Real ln2(mpfr_prec_t bits);

/// 10^exponent at the given precision.
Real pow10(long exponent, mpfr_prec_t bits);

}  // namespace qseries
