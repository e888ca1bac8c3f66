#include "qseries/constants.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "qseries/error.hpp"

namespace qseries {

namespace {

constexpr std::array<std::pair<NamedConstant, std::string_view>, 16> kNames{{
    {NamedConstant::pi, "pi"},
    {NamedConstant::e_pi, "e_pi"},
    {NamedConstant::phi, "phi"},
    {NamedConstant::ln2, "ln2"},
    {NamedConstant::ln_pi, "ln_pi"},
    {NamedConstant::gamma_quarter, "gamma_quarter"},
    {NamedConstant::gamma_three_quarter, "gamma_three_quarter"},
    {NamedConstant::sqrt2, "sqrt2"},
    {NamedConstant::sqrt5, "sqrt5"},
    {NamedConstant::sqrt7, "sqrt7"},
    {NamedConstant::root4_7, "root4_7"},
    {NamedConstant::root4_343, "root4_343"},
    {NamedConstant::zeta3, "zeta3"},
    {NamedConstant::zeta5, "zeta5"},
    {NamedConstant::zeta7, "zeta7"},
    {NamedConstant::catalan, "catalan"},
}};

constexpr std::array<NamedConstant, 16> kAll = [] {
  std::array<NamedConstant, 16> out{};
  for (std::size_t i = 0; i < kNames.size(); ++i) out[i] = kNames[i].first;
  return out;
}();

// Terms needed for the accelerated series: error is about 2 / (3+sqrt 8)^n.
std::size_t acceleration_terms(mpfr_prec_t bits) {
  return static_cast<std::size_t>(std::ceil(static_cast<double>(bits) * std::log(2.0) / std::log(3.0 + std::sqrt(8.0)))) +
         4;
}

// sum_{k=0}^{n-1} (-1)^k a(k) accelerated with the Chebyshev weights of
// Cohen-Rodriguez Villegas-Zagier, algorithm 1.
template <typename Term>
Real accelerated_alternating_sum(mpfr_prec_t bits, Term&& term) {
  const std::size_t n = acceleration_terms(bits);
  const mpfr_prec_t w = bits + 32;
  Real d = pow(Real(3, w) + sqrt(Real(8, w)), static_cast<long>(n));
  d = (d + Real(1, w) / d) / 2;
  Real b(-1, w);
  Real c = -d;
  Real s(w);
  const long nn = static_cast<long>(n);
  for (long k = 0; k < nn; ++k) {
    c = b - c;
    s += c * term(k, w);
    // b <- b (k+n)(k-n) / ((k+1/2)(k+1)), written over integers.
    b *= (k + nn);
    b *= (k - nn);
    b *= 2;
    b /= (2 * k + 1);
    b /= (k + 1);
  }
  return (s / d).rounded(bits);
}

}  // namespace

std::span<const NamedConstant> all_constants() { return kAll; }

std::string_view constant_name(NamedConstant c) {
  for (const auto& [k, name] : kNames) {
    if (k == c) return name;
  }
  return "?";
}

std::optional<NamedConstant> constant_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

namespace detail {

Real dirichlet_eta(unsigned s, mpfr_prec_t bits) {
  return accelerated_alternating_sum(bits, [s](long k, mpfr_prec_t w) {
    Real t(1, w);
    Real base(k + 1, w);
    return t / pow(base, static_cast<long>(s));
  });
}

Real catalan_series(mpfr_prec_t bits) {
  return accelerated_alternating_sum(bits, [](long k, mpfr_prec_t w) {
    Real t(1, w);
    t /= (2 * k + 1);
    t /= (2 * k + 1);
    return t;
  });
}

}  // namespace detail

namespace {

Real zeta_odd(unsigned s, mpfr_prec_t bits) {
  // zeta(s) = eta(s) / (1 - 2^(1-s))
  const mpfr_prec_t w = bits + 16;
  Real eta = detail::dirichlet_eta(s, w);
  Real one(1, w);
  Real factor = one - pow(Real(2, w), 1 - static_cast<long>(s));
  return (eta / factor).rounded(bits);
}

Real gamma_quarter(mpfr_prec_t bits) {
  // Gamma(1/4)^2 = (2 pi)^(3/2) / AGM(1, sqrt 2)
  Real two_pi = pi(bits) * 2;
  Real num = two_pi * sqrt(two_pi);
  Real m = agm(Real(1, bits), sqrt(Real(2, bits)));
  return sqrt(num / m);
}

}  // namespace

Real constant(NamedConstant c, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  switch (c) {
    case NamedConstant::pi:
      return pi(bits);
    case NamedConstant::e_pi:
      return exp(pi(bits));
    case NamedConstant::phi:
      return (Real(1, bits) + sqrt(Real(5, bits))) / 2;
    case NamedConstant::ln2:
      return ln2(bits);
    case NamedConstant::ln_pi:
      return log(pi(bits));
    case NamedConstant::gamma_quarter:
      return gamma_quarter(bits);
    case NamedConstant::gamma_three_quarter: {
      // Reflection: Gamma(1/4) Gamma(3/4) = pi sqrt 2
      return pi(bits) * sqrt(Real(2, bits)) / gamma_quarter(bits);
    }
    case NamedConstant::sqrt2:
      return sqrt(Real(2, bits));
    case NamedConstant::sqrt5:
      return sqrt(Real(5, bits));
    case NamedConstant::sqrt7:
      return sqrt(Real(7, bits));
    case NamedConstant::root4_7:
      return sqrt(sqrt(Real(7, bits)));
    case NamedConstant::root4_343: {
      Real r7 = sqrt(Real(7, bits));
      return r7 * sqrt(r7);
    }
    case NamedConstant::zeta3:
      return zeta_odd(3, bits);
    case NamedConstant::zeta5:
      return zeta_odd(5, bits);
    case NamedConstant::zeta7:
      return zeta_odd(7, bits);
    case NamedConstant::catalan:
      return detail::catalan_series(bits);
  }
  throw InvalidArgument("unknown constant");
}

}  // namespace qseries
