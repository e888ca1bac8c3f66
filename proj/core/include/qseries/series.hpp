#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qseries/precision.hpp"
#include "qseries/rational.hpp"
#include "qseries/real.hpp"

namespace qseries {

enum class SeriesFamily { lambert, cosh, sigma_exp, euler_f, rr_j, eisenstein };

/// How an Eisenstein argument maps to the expansion variable x in
/// 1 + c_w sum sigma_{w-1}(k) x^k.
enum class EisensteinConvention {
  pi_scale,      ///< x = e^(-2 pi q)
  two_pi_scale,  ///< x = e^(-4 pi q)
};

/// Names one series or product. `s` is the exponent (summand n^-s), `alpha`
/// the scale (summand exponent alpha*pi*n); weight/convention are used only
/// by the Eisenstein family.
struct SeriesSpec {
  SeriesFamily family = SeriesFamily::lambert;
  int s = 0;
  Rational alpha = 1;
  int weight = 0;
  EisensteinConvention convention = EisensteinConvention::pi_scale;

  static SeriesSpec lambert(int s, Rational alpha);
  static SeriesSpec cosh(int s, Rational alpha);
  static SeriesSpec sigma_exp(int s, Rational alpha);
  static SeriesSpec euler_f(Rational alpha);
  static SeriesSpec rr_j(Rational alpha);
  static SeriesSpec eisenstein(int weight, Rational q, EisensteinConvention convention);

  friend bool operator==(const SeriesSpec& a, const SeriesSpec& b);
};

/// Compact text form, e.g. "lambert(1, 1/5)", "E(4, 1/10, pi)", "F(2)".
std::string to_string(const SeriesSpec& spec);
SeriesSpec parse_series_spec(std::string_view text);
std::string_view to_string(EisensteinConvention convention);

struct SeriesEvaluation {
  Real value;
  std::size_t terms;
};

/// sum_{n>=1} n^-s / (e^(alpha pi n) - 1)
Real lambert(int s, const Rational& alpha, const PrecisionContext& ctx);
/// sum_{n>=1} n^-s / (cosh(alpha pi n) - 1)
Real cosh_series(int s, const Rational& alpha, const PrecisionContext& ctx);
/// sum_{n>=1} sigma_1(n) n^s e^(-alpha pi n)
Real sigma_exp_series(int s, const Rational& alpha, const PrecisionContext& ctx);
/// prod_{n>=1} 1 / (1 - e^(-alpha pi n)), evaluated as exp(lambert(1, alpha)).
Real euler_F(const Rational& alpha, const PrecisionContext& ctx);
/// prod over n not divisible by 5 of (1 - e^(-alpha pi n)) = F(5 alpha) / F(alpha).
Real rr_J(const Rational& alpha, const PrecisionContext& ctx);
/// 1 + c_w sum_{k>=1} sigma_{w-1}(k) x^k; c_4 = 240, c_8 = 480, c_12 = 65520/691.
Real eisenstein(int weight, const Rational& q, EisensteinConvention convention, const PrecisionContext& ctx);

Real evaluate(const SeriesSpec& spec, const PrecisionContext& ctx);

/// Raw partial sums with an explicit number of terms (0 picks the rigorous
/// truncation index). Used for truncation-stability checks.
SeriesEvaluation lambert_sum(int s, const Rational& alpha, const PrecisionContext& ctx, std::size_t terms = 0);
SeriesEvaluation cosh_sum(int s, const Rational& alpha, const PrecisionContext& ctx, std::size_t terms = 0);
SeriesEvaluation sigma_exp_sum(int s, const Rational& alpha, const PrecisionContext& ctx, std::size_t terms = 0);
SeriesEvaluation eisenstein_sum(int weight, const Rational& q, EisensteinConvention convention,
                                const PrecisionContext& ctx, std::size_t terms = 0);

}  // namespace qseries
