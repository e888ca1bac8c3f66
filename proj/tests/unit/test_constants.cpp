#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qseries/constants.hpp"

using namespace qseries;

namespace {

// MPFR's own special functions serve as the independent reference.
Real mpfr_reference(NamedConstant c, mpfr_prec_t bits) {
  Real out(bits), t(bits);
  switch (c) {
    case NamedConstant::pi: mpfr_const_pi(out.get(), MPFR_RNDN); break;
    case NamedConstant::e_pi:
      mpfr_const_pi(t.get(), MPFR_RNDN);
      mpfr_exp(out.get(), t.get(), MPFR_RNDN);
      break;
    case NamedConstant::phi:
      mpfr_sqrt_ui(t.get(), 5, MPFR_RNDN);
      mpfr_add_ui(t.get(), t.get(), 1, MPFR_RNDN);
      mpfr_div_ui(out.get(), t.get(), 2, MPFR_RNDN);
      break;
    case NamedConstant::ln2: mpfr_const_log2(out.get(), MPFR_RNDN); break;
    case NamedConstant::ln_pi:
      mpfr_const_pi(t.get(), MPFR_RNDN);
      mpfr_log(out.get(), t.get(), MPFR_RNDN);
      break;
    case NamedConstant::gamma_quarter:
      mpfr_set_d(t.get(), 0.25, MPFR_RNDN);
      mpfr_gamma(out.get(), t.get(), MPFR_RNDN);
      break;
    case NamedConstant::gamma_three_quarter:
      mpfr_set_d(t.get(), 0.75, MPFR_RNDN);
      mpfr_gamma(out.get(), t.get(), MPFR_RNDN);
      break;
    case NamedConstant::sqrt2: mpfr_sqrt_ui(out.get(), 2, MPFR_RNDN); break;
    case NamedConstant::sqrt5: mpfr_sqrt_ui(out.get(), 5, MPFR_RNDN); break;
    case NamedConstant::sqrt7: mpfr_sqrt_ui(out.get(), 7, MPFR_RNDN); break;
    case NamedConstant::root4_7:
      mpfr_set_ui(t.get(), 7, MPFR_RNDN);
      mpfr_rootn_ui(out.get(), t.get(), 4, MPFR_RNDN);
      break;
    case NamedConstant::root4_343:
      mpfr_set_ui(t.get(), 343, MPFR_RNDN);
      mpfr_rootn_ui(out.get(), t.get(), 4, MPFR_RNDN);
      break;
    case NamedConstant::zeta3: mpfr_zeta_ui(out.get(), 3, MPFR_RNDN); break;
    case NamedConstant::zeta5: mpfr_zeta_ui(out.get(), 5, MPFR_RNDN); break;
    case NamedConstant::zeta7: mpfr_zeta_ui(out.get(), 7, MPFR_RNDN); break;
    case NamedConstant::catalan: mpfr_const_catalan(out.get(), MPFR_RNDN); break;
  }
  return out;
}

class ConstantsAt : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(ConstantsAt, AgreeWithMpfrSpecialFunctions) {
  const PrecisionContext ctx = make_context(GetParam());
  for (NamedConstant c : all_constants()) {
    const Real value = constant(c, ctx);
    const Real reference = mpfr_reference(c, ctx.bits() + 64);
    EXPECT_GE(oracle::agree(reference, value), ctx.decimal_digits()) << constant_name(c);
  }
}

INSTANTIATE_TEST_SUITE_P(Digits, ConstantsAt, ::testing::Values(30, 100, 300, 1000));

TEST(Constants, NamesRoundTrip) {
  EXPECT_EQ(all_constants().size(), 16u);
  for (NamedConstant c : all_constants()) EXPECT_EQ(constant_from_name(constant_name(c)), c);
  EXPECT_FALSE(constant_from_name("tau").has_value());
}

TEST(Constants, GammaReflection) {
  // Gamma(1/4) Gamma(3/4) = pi sqrt 2
  for (int digits : {50, 200, 800}) {
    const PrecisionContext ctx = make_context(digits);
    const Real lhs = constant(NamedConstant::gamma_quarter, ctx) * constant(NamedConstant::gamma_three_quarter, ctx);
    const Real rhs = constant(NamedConstant::pi, ctx) * constant(NamedConstant::sqrt2, ctx);
    EXPECT_GE(oracle::agree(rhs, lhs), digits);
  }
}

TEST(Constants, ZetaFromAperySeries) {
  // zeta(3) = 5/2 sum (-1)^(n+1) / (n^3 C(2n, n))
  const PrecisionContext ctx = make_context(120);
  const mpfr_prec_t bits = ctx.bits() + 64;
  Real sum(bits);
  BigInt binom = 1;
  for (long n = 1; n < 220; ++n) {
    binom = binom * 2 * (2 * n - 1) / n;
    Real term = Real(1, bits) / (Real(BigInt(binom * n * n * n), bits));
    if (n % 2 == 0) term = -term;
    sum += term;
  }
  const Real apery = sum * Real(Rational(5, 2), bits);
  EXPECT_GE(oracle::agree(apery, constant(NamedConstant::zeta3, ctx)), 120);
}

TEST(Constants, RepeatedEvaluationIsBitIdentical) {
  const PrecisionContext ctx = make_context(200);
  for (NamedConstant c : all_constants()) EXPECT_TRUE(constant(c, ctx).identical(constant(c, ctx)));
}
