#include "qseries/series.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qseries/arith.hpp"
#include "qseries/error.hpp"
#include "qseries/tail_bound.hpp"

namespace qseries {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn4 = 1.3862943611198906;
constexpr double kLn10 = 2.302585092994046;
// Exponentials are recomputed from scratch every this many steps.
constexpr std::size_t kReexpInterval = 64;

void require_positive(const Rational& alpha, const char* what) {
  if (sgn(alpha) <= 0) throw InvalidArgument(std::string(what) + " requires a positive scale, got " + to_string(alpha));
}

// Estimated log10 of a positive series sum_{n>=1} exp(log_term(n)), in double.
// Only used to size the working precision, so a rough answer is enough.
template <typename LogTerm>
double estimate_log10(LogTerm&& log_term, double beta, int m) {
  const double peak = std::max(1.0, static_cast<double>(std::max(m, 0)) / beta);
  double max_log = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  for (std::size_t n = 1; n < 50'000'000; ++n) {
    const double lt = log_term(static_cast<double>(n));
    logs.push_back(lt);
    max_log = std::max(max_log, lt);
    if (static_cast<double>(n) > peak && lt < max_log - 50.0) break;
  }
  double sum = 0.0;
  for (double lt : logs) sum += std::exp(lt - max_log);
  return (max_log + std::log(sum)) / kLn10;
}

double log_expm1(double x) { return x > 30.0 ? x : std::log(std::expm1(x)); }

// log(cosh x - 1) = log 2 + 2 log sinh(x/2)
double log_cosh_m1(double x) {
  const double h = x / 2.0;
  const double log_sinh = h > 20.0 ? h - kLn2 : std::log(std::sinh(h));
  return kLn2 + 2.0 * log_sinh;
}

double lambert_log10_estimate(int s, double beta) {
  return estimate_log10([&](double n) { return -s * std::log(n) - log_expm1(beta * n); }, beta, -s);
}

double extra_digits(double log10_estimate) { return std::max(0.0, std::ceil(log10_estimate)); }

// Working precision: target digits plus headroom for the magnitude of the
// result and for rounding accumulated over `terms` additions.
mpfr_prec_t working_bits(const PrecisionContext& ctx, double log10_magnitude, std::size_t terms) {
  const double digits = ctx.working_digits() + extra_digits(log10_magnitude) +
                        std::ceil(std::log10(static_cast<double>(terms) + 1.0)) + 2.0;
  return PrecisionContext::bits_for_digits(digits);
}

// x <- x * n^e (or x / n^e), batching factors into 64-bit words.
void scale_by_power(Real& x, unsigned long n, int e, bool divide) {
  unsigned long chunk = 1;
  const auto flush = [&] {
    if (chunk == 1) return;
    if (divide) mpfr_div_ui(x.get(), x.get(), chunk, MPFR_RNDN);
    else mpfr_mul_ui(x.get(), x.get(), chunk, MPFR_RNDN);
    chunk = 1;
  };
  for (int i = 0; i < e; ++i) {
    if (chunk > std::numeric_limits<unsigned long>::max() / n) flush();
    chunk *= n;
  }
  flush();
}

void apply_exponent(Real& x, std::size_t n, int s) {
  if (s > 0) scale_by_power(x, n, s, true);
  else if (s < 0) scale_by_power(x, n, -s, false);
}

// Walks x_n = e^(-beta n) by repeated multiplication, re-exponentiating
// periodically to bound drift.
class ExponentialWalk {
 public:
  ExponentialWalk(const Real& beta) : beta_(beta), step_(exp(-beta)), current_(step_) {}

  const Real& value() const { return current_; }

  void advance_to(std::size_t n) {
    if (n % kReexpInterval == 0) {
      Real arg = beta_ * static_cast<long>(n);
      current_ = exp(-arg);
    } else {
      current_ *= step_;
    }
  }

 private:
  Real beta_;
  Real step_;
  Real current_;
};

Real scaled_pi(const Rational& alpha, mpfr_prec_t bits) { return pi(bits) * Real(alpha, bits); }

double eisenstein_coefficient(int weight) {
  switch (weight) {
    case 4: return 240.0;
    case 8: return 480.0;
    default: return 65520.0 / 691.0;
  }
}

void check_weight(int weight) {
  if (weight != 4 && weight != 8 && weight != 12) {
    throw InvalidArgument("Eisenstein weight must be 4, 8 or 12, got " + std::to_string(weight));
  }
}

Rational eisenstein_scale(const Rational& q, EisensteinConvention convention) {
  return q * (convention == EisensteinConvention::pi_scale ? 2 : 4);
}

}  // namespace

SeriesSpec SeriesSpec::lambert(int s, Rational alpha) {
  return {SeriesFamily::lambert, s, std::move(alpha), 0, EisensteinConvention::pi_scale};
}
SeriesSpec SeriesSpec::cosh(int s, Rational alpha) {
  return {SeriesFamily::cosh, s, std::move(alpha), 0, EisensteinConvention::pi_scale};
}
SeriesSpec SeriesSpec::sigma_exp(int s, Rational alpha) {
  return {SeriesFamily::sigma_exp, s, std::move(alpha), 0, EisensteinConvention::pi_scale};
}
SeriesSpec SeriesSpec::euler_f(Rational alpha) {
  return {SeriesFamily::euler_f, 0, std::move(alpha), 0, EisensteinConvention::pi_scale};
}
SeriesSpec SeriesSpec::rr_j(Rational alpha) {
  return {SeriesFamily::rr_j, 0, std::move(alpha), 0, EisensteinConvention::pi_scale};
}
SeriesSpec SeriesSpec::eisenstein(int weight, Rational q, EisensteinConvention convention) {
  return {SeriesFamily::eisenstein, 0, std::move(q), weight, convention};
}

bool operator==(const SeriesSpec& a, const SeriesSpec& b) {
  if (a.family != b.family || a.alpha != b.alpha) return false;
  switch (a.family) {
    case SeriesFamily::lambert:
    case SeriesFamily::cosh:
    case SeriesFamily::sigma_exp:
      return a.s == b.s;
    case SeriesFamily::euler_f:
    case SeriesFamily::rr_j:
      return true;
    case SeriesFamily::eisenstein:
      return a.weight == b.weight && a.convention == b.convention;
  }
  return false;
}

std::string_view to_string(EisensteinConvention convention) {
  return convention == EisensteinConvention::pi_scale ? "pi" : "two_pi";
}

std::string to_string(const SeriesSpec& spec) {
  const std::string a = to_string(spec.alpha);
  switch (spec.family) {
    case SeriesFamily::lambert: return "lambert(" + std::to_string(spec.s) + ", " + a + ")";
    case SeriesFamily::cosh: return "cosh(" + std::to_string(spec.s) + ", " + a + ")";
    case SeriesFamily::sigma_exp: return "sigma_exp(" + std::to_string(spec.s) + ", " + a + ")";
    case SeriesFamily::euler_f: return "F(" + a + ")";
    case SeriesFamily::rr_j: return "J(" + a + ")";
    case SeriesFamily::eisenstein:
      return "E(" + std::to_string(spec.weight) + ", " + a + ", " + std::string(to_string(spec.convention)) + ")";
  }
  return "?";
}

SeriesSpec parse_series_spec(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  const auto open = compact.find('(');
  if (open == std::string::npos || compact.back() != ')') {
    throw InvalidArgument("malformed series spec '" + std::string(text) + "'");
  }
  const std::string name = compact.substr(0, open);
  std::vector<std::string> args;
  std::string inner = compact.substr(open + 1, compact.size() - open - 2);
  std::size_t start = 0;
  while (true) {
    const auto comma = inner.find(',', start);
    args.push_back(inner.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const auto as_int = [&](const std::string& s) {
    const Rational r = parse_rational(s);
    if (r.get_den() != 1 || !r.get_num().fits_sint_p()) throw InvalidArgument("expected an integer, got '" + s + "'");
    return static_cast<int>(r.get_num().get_si());
  };
  const auto expect = [&](std::size_t n) {
    if (args.size() != n) throw InvalidArgument("wrong number of arguments in '" + std::string(text) + "'");
  };
  SeriesSpec spec;
  if (name == "lambert" || name == "cosh" || name == "sigma_exp") {
    expect(2);
    const int s = as_int(args[0]);
    Rational a = parse_rational(args[1]);
    spec = name == "lambert" ? SeriesSpec::lambert(s, a)
           : name == "cosh"  ? SeriesSpec::cosh(s, a)
                             : SeriesSpec::sigma_exp(s, a);
  } else if (name == "F" || name == "J") {
    expect(1);
    Rational a = parse_rational(args[0]);
    spec = name == "F" ? SeriesSpec::euler_f(a) : SeriesSpec::rr_j(a);
  } else if (name == "E") {
    expect(3);
    EisensteinConvention conv;
    if (args[2] == "pi") conv = EisensteinConvention::pi_scale;
    else if (args[2] == "two_pi") conv = EisensteinConvention::two_pi_scale;
    else throw InvalidArgument("unknown Eisenstein convention '" + args[2] + "'");
    spec = SeriesSpec::eisenstein(as_int(args[0]), parse_rational(args[1]), conv);
    check_weight(spec.weight);
  } else {
    throw InvalidArgument("unknown series family '" + name + "'");
  }
  if (sgn(spec.alpha) <= 0) throw InvalidArgument("series scale must be positive in '" + std::string(text) + "'");
  return spec;
}

SeriesEvaluation lambert_sum(int s, const Rational& alpha, const PrecisionContext& ctx, std::size_t terms) {
  require_positive(alpha, "lambert");
  const double beta_d = alpha.get_d() * kPi;
  // n^-s / (e^(beta n) - 1) <= 2 n^max(-s,0) e^(-beta n) once e^(beta n) >= 2
  const TailMajorant majorant{std::log10(2.0), std::max(-s, 0), beta_d, kLn2};
  const std::size_t n_terms = terms ? terms : truncation_index(majorant, ctx.working_digits());
  const mpfr_prec_t bits = working_bits(ctx, lambert_log10_estimate(s, beta_d), n_terms);

  ExponentialWalk walk(scaled_pi(alpha, bits));
  const Real one(1, bits);
  Real sum(bits);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    if (n > 1) walk.advance_to(n);
    const Real& x = walk.value();
    Real term = x / (one - x);
    apply_exponent(term, n, s);
    sum += term;
  }
  return {std::move(sum), n_terms};
}

SeriesEvaluation cosh_sum(int s, const Rational& alpha, const PrecisionContext& ctx, std::size_t terms) {
  require_positive(alpha, "cosh_series");
  const double beta_d = alpha.get_d() * kPi;
  // 1 / (cosh y - 1) <= 4 e^-y for y >= ln 4
  const TailMajorant majorant{std::log10(4.0), std::max(-s, 0), beta_d, kLn4};
  const std::size_t n_terms = terms ? terms : truncation_index(majorant, ctx.working_digits());
  const double mag =
      estimate_log10([&](double n) { return -s * std::log(n) - log_cosh_m1(beta_d * n); }, beta_d, -s);
  const mpfr_prec_t bits = working_bits(ctx, mag, n_terms);

  ExponentialWalk walk(scaled_pi(alpha, bits));
  const Real one(1, bits);
  Real sum(bits);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    if (n > 1) walk.advance_to(n);
    const Real& x = walk.value();
    // 1 / (cosh y - 1) = 2x / (1 - x)^2 with x = e^-y
    Real d = one - x;
    Real term = x * 2 / (d * d);
    apply_exponent(term, n, s);
    sum += term;
  }
  return {std::move(sum), n_terms};
}

SeriesEvaluation sigma_exp_sum(int s, const Rational& alpha, const PrecisionContext& ctx, std::size_t terms) {
  require_positive(alpha, "sigma_exp_series");
  if (s < 0) throw InvalidArgument("sigma_exp_series requires s >= 0");
  const double beta_d = alpha.get_d() * kPi;
  // sigma_1(n) <= n^2
  const TailMajorant majorant{0.0, s + 2, beta_d, 0.0};
  const std::size_t n_terms = terms ? terms : truncation_index(majorant, ctx.working_digits());
  const double mag = estimate_log10(
      [&](double n) { return std::log(1.645 * n) + s * std::log(n) - beta_d * n; }, beta_d, s + 1);
  const mpfr_prec_t bits = working_bits(ctx, mag, n_terms);

  const auto sigma = cached_sigma_table(1, static_cast<std::int64_t>(n_terms));
  ExponentialWalk walk(scaled_pi(alpha, bits));
  Real sum(bits);
  Real term(bits);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    if (n > 1) walk.advance_to(n);
    mpfr_mul_z(term.get(), walk.value().get(), (*sigma)[n - 1].get_mpz_t(), MPFR_RNDN);
    apply_exponent(term, n, -s);
    sum += term;
  }
  return {std::move(sum), n_terms};
}

SeriesEvaluation eisenstein_sum(int weight, const Rational& q, EisensteinConvention convention,
                                const PrecisionContext& ctx, std::size_t terms) {
  check_weight(weight);
  require_positive(q, "eisenstein");
  const Rational scale = eisenstein_scale(q, convention);
  const double beta_d = scale.get_d() * kPi;
  const double c = eisenstein_coefficient(weight);
  // sigma_{w-1}(k) <= zeta(w-1) k^(w-1) < 2 k^(w-1)
  const TailMajorant majorant{std::log10(2.0 * c), weight - 1, beta_d, 0.0};
  const std::size_t n_terms = terms ? terms : truncation_index(majorant, ctx.working_digits());
  const double mag = std::max(0.0, std::log10(c) + lambert_log10_estimate(1 - weight, beta_d));
  const mpfr_prec_t bits = working_bits(ctx, mag, n_terms);

  const auto sigma = cached_sigma_table(weight - 1, static_cast<std::int64_t>(n_terms));
  ExponentialWalk walk(scaled_pi(scale, bits));
  Real sum(bits);
  Real term(bits);
  for (std::size_t k = 1; k <= n_terms; ++k) {
    if (k > 1) walk.advance_to(k);
    mpfr_mul_z(term.get(), walk.value().get(), (*sigma)[k - 1].get_mpz_t(), MPFR_RNDN);
    sum += term;
  }
  Rational coefficient = weight == 4 ? Rational(240) : weight == 8 ? Rational(480) : Rational(65520, 691);
  sum *= Real(coefficient, bits);
  sum += Real(1, bits);
  return {std::move(sum), n_terms};
}

Real lambert(int s, const Rational& alpha, const PrecisionContext& ctx) {
  return lambert_sum(s, alpha, ctx).value;
}

Real cosh_series(int s, const Rational& alpha, const PrecisionContext& ctx) {
  return cosh_sum(s, alpha, ctx).value;
}

Real sigma_exp_series(int s, const Rational& alpha, const PrecisionContext& ctx) {
  return sigma_exp_sum(s, alpha, ctx).value;
}

Real euler_F(const Rational& alpha, const PrecisionContext& ctx) {
  require_positive(alpha, "euler_F");
  // log F(alpha) = lambert(1, alpha) <= zeta(2) / (alpha pi) = pi / (6 alpha)
  const double log10_f = kPi / (6.0 * alpha.get_d()) / kLn10;
  const PrecisionContext wider(ctx.decimal_digits() + static_cast<int>(extra_digits(log10_f)) + 1,
                               ctx.guard_digits());
  return exp(lambert(1, alpha, wider));
}

Real rr_J(const Rational& alpha, const PrecisionContext& ctx) {
  require_positive(alpha, "rr_J");
  // J = F(5 alpha) / F(alpha) <= 1, taken in log form.
  return exp(lambert(1, alpha * 5, ctx) - lambert(1, alpha, ctx));
}

Real eisenstein(int weight, const Rational& q, EisensteinConvention convention, const PrecisionContext& ctx) {
  return eisenstein_sum(weight, q, convention, ctx).value;
}

Real evaluate(const SeriesSpec& spec, const PrecisionContext& ctx) {
  switch (spec.family) {
    case SeriesFamily::lambert: return lambert(spec.s, spec.alpha, ctx);
    case SeriesFamily::cosh: return cosh_series(spec.s, spec.alpha, ctx);
    case SeriesFamily::sigma_exp: return sigma_exp_series(spec.s, spec.alpha, ctx);
    case SeriesFamily::euler_f: return euler_F(spec.alpha, ctx);
    case SeriesFamily::rr_j: return rr_J(spec.alpha, ctx);
    case SeriesFamily::eisenstein: return eisenstein(spec.weight, spec.alpha, spec.convention, ctx);
  }
  throw InvalidArgument("unknown series family");
}

}  // namespace qseries
