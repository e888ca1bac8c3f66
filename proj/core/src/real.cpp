#include "qseries/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "qseries/error.hpp"

namespace qseries {

namespace {

struct MpfrStringDeleter {
  void operator()(char* p) const { mpfr_free_str(p); }
};

std::string format(const char* fmt, int digits, mpfr_srcptr value) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, fmt, digits, value) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::unique_ptr<char, MpfrStringDeleter> guard(raw);
  return std::string(raw);
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const BigInt& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, mpfr_prec_t bits) {
  Real out(bits);
  const std::string owned(text);
  char* end = nullptr;
  if (!owned.empty()) mpfr_strtofr(out.value_, owned.c_str(), &end, 10, MPFR_RNDN);
  if (owned.empty() || end == owned.c_str() || *end != '\0') {
    throw InvalidArgument("not a decimal number: '" + owned + "'");
  }
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave the moved-from object valid with a tiny allocation of its own.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::rounded(mpfr_prec_t bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

double Real::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  // Exponent and mantissa separately so huge/tiny values don't overflow a double.
  long exponent = 0;
  const double mantissa = mpfr_get_d_2exp(&exponent, value_, MPFR_RNDN);
  return std::log10(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log10(2.0);
}

std::string Real::to_fixed(int fraction_digits) const {
  return format("%.*Rf", std::max(fraction_digits, 0), value_);
}

std::string Real::to_scientific(int significant_digits) const {
  return format("%.*Re", std::max(significant_digits - 1, 0), value_);
}

void Real::promote_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

Real& Real::operator+=(const Real& rhs) {
  promote_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  promote_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  promote_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  promote_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool Real::identical(const Real& other) const {
  if (precision() != other.precision()) return false;
  if (mpfr_nan_p(value_) || mpfr_nan_p(other.value_)) {
    return mpfr_nan_p(value_) && mpfr_nan_p(other.value_);
  }
  return mpfr_equal_p(value_, other.value_) && mpfr_signbit(value_) == mpfr_signbit(other.value_);
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real exp(const Real& x) {
  Real out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

Real pow(const Real& base, const Rational& exponent) {
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) {
    return pow(base, exponent.get_num().get_si());
  }
  Real e(exponent, base.precision());
  Real out(base.precision());
  mpfr_pow(out.get(), base.get(), e.get(), MPFR_RNDN);
  return out;
}

Real agm(const Real& a, const Real& b) {
  Real out(std::max(a.precision(), b.precision()));
  mpfr_agm(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real floor(const Real& x) {
  Real out(x.precision());
  mpfr_floor(out.get(), x.get());
  return out;
}

Real frac(const Real& x) {
  Real out(x.precision());
  mpfr_sub(out.get(), x.get(), floor(x).get(), MPFR_RNDN);
  return out;
}

BigInt nearest_integer(const Real& x) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDNA);
  return out;
}

BigInt floor_integer(const Real& x) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDD);
  return out;
}

Real pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real ln2(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_log2(out.get(), MPFR_RNDN);
  return out;
}

Real pow10(long exponent, mpfr_prec_t bits) {
  Real out(bits);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent), MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

}  // namespace qseries
