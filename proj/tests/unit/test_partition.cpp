#include <gtest/gtest.h>

#include <cmath>

#include "qseries/arith.hpp"
#include "qseries/error.hpp"
#include "qseries/partition.hpp"

using namespace qseries;

TEST(DigitExpand, BinaryExpansion) {
  const PrecisionContext ctx = make_context(60);
  const Real x = Real::parse("0.625", ctx.bits());
  EXPECT_EQ(digit_expand(x, Real(2, ctx.bits()), 3, ctx), (std::vector<BigInt>{1, 0, 1}));
}

TEST(DigitExpand, CentralBinomialsInBaseHundred) {
  // 1 / sqrt(1 - 4/100) = sum C(2n, n) / 100^n; the digits carry once C(2n, n) >= 100.
  const PrecisionContext ctx = make_context(80);
  const mpfr_prec_t bits = ctx.bits();
  const Real x = Real(1, bits) / sqrt(Real(1, bits) - Real(Rational(4, 100), bits));
  EXPECT_EQ(x.to_fixed(20), "1.02062072615965754092");
  const auto digits = digit_expand(frac(x), Real(100, bits), 4, ctx);
  EXPECT_EQ(digits, (std::vector<BigInt>{2, 6, 20, 72}));
}

TEST(DigitExpand, InvertsRadixAssembly) {
  const PrecisionContext ctx = make_context(200);
  const mpfr_prec_t bits = ctx.bits();
  const Real x0 = frac(sqrt(Real(2, bits)) * 1000);
  const Real base = exp(Real(Rational(7, 3), bits));
  ExpansionState state(x0, base);
  Real assembled(bits);
  Real scale(1, bits);
  for (int i = 0; i < 100; ++i) {
    scale /= base;
    assembled += Real(state.step(), bits) * scale;
  }
  assembled += state.remainder() * scale;
  EXPECT_EQ(state.digits_emitted(), 100u);
  EXPECT_LT(abs(assembled - x0).log10_abs(), -ctx.working_digits() + 5);
}

TEST(DigitExpand, RejectsBadInput) {
  const PrecisionContext ctx = make_context(60);
  const mpfr_prec_t bits = ctx.bits();
  const Real x = Real::parse("0.5", bits);
  EXPECT_THROW(digit_expand(x, Real(1, bits), 3, ctx), InvalidArgument);
  EXPECT_THROW(digit_expand(Real::parse("1.5", bits), Real(2, bits), 3, ctx), InvalidArgument);
  EXPECT_THROW(digit_expand(Real::parse("-0.5", bits), Real(2, bits), 3, ctx), InvalidArgument);
  EXPECT_THROW(digit_expand(x, Real(2, bits), 0, ctx), InvalidArgument);
  // 10 base-1000 digits need 80 decimal digits.
  EXPECT_THROW(digit_expand(x, Real(1000, bits), 10, ctx), InvalidArgument);
  // Inputs carrying less precision than the context.
  EXPECT_THROW(digit_expand(Real::parse("0.5", 64), Real(2, bits), 3, ctx), InvalidArgument);
}

TEST(PartitionsByExpansion, SmallCount) {
  EXPECT_EQ(partitions_by_expansion(5, make_context(2850)), (std::vector<BigInt>{1, 1, 2, 3, 5, 7}));
}

TEST(PartitionsByExpansion, FullWindowMatchesOracle) {
  const std::vector<BigInt> expanded = partitions_by_expansion(205, make_context(2850));
  EXPECT_EQ(expanded, partition_oracle(205));
  EXPECT_EQ(expanded[200], BigInt("3972999029388"));
}

TEST(PartitionsByExpansion, Preconditions) {
  EXPECT_THROW(partitions_by_expansion(206, make_context(2850)), InvalidArgument);
  EXPECT_THROW(partitions_by_expansion(0, make_context(2850)), InvalidArgument);
  EXPECT_THROW(partitions_by_expansion(10, make_context(2799)), InvalidArgument);
  EXPECT_NO_THROW(partitions_by_expansion(10, make_context(2800)));
}

TEST(PartitionsByExpansion, BaseIsCarryFree) {
  // p(n) < e^(10 pi) and sum_{m > n} p(m) e^(-10 pi (m - n)) < 1 for n <= 205.
  const std::vector<BigInt> p = partition_oracle(600);
  const double log_base = 10 * std::acos(-1.0);
  for (std::size_t n = 0; n <= 205; ++n) {
    const double log_p = std::log(p[n].get_d());
    EXPECT_LT(log_p, log_base) << n;
    double tail = 0;
    for (std::size_t m = n + 1; m < p.size(); ++m) tail += std::exp(std::log(p[m].get_d()) - log_base * (m - n));
    EXPECT_LT(tail, 1.0) << n;
  }
  // ... and the window ends where it should.
  EXPECT_GT(std::log(p[230].get_d()), log_base);
}

TEST(HardyRamanujan, RatioAtTwoHundred) {
  const PrecisionContext ctx = make_context(40);
  const Real estimate = hr_estimate(200, ctx);
  const double ratio = (estimate / Real(partition_oracle(200)[200], estimate.precision())).to_double();
  EXPECT_NEAR(ratio, 1.068968763, 1e-8);
}

TEST(HardyRamanujan, IncreasingAndSmooth) {
  const PrecisionContext ctx = make_context(40);
  Real previous = hr_estimate(9, ctx);
  double last_step = 0;
  for (long n = 10; n <= 500; ++n) {
    const Real current = hr_estimate(n, ctx);
    EXPECT_GT(current, previous) << n;
    last_step = (current / previous).to_double();
    previous = current;
  }
  EXPECT_LT(last_step, 1.07);
  EXPECT_NEAR((hr_estimate(100000, ctx) / hr_estimate(99999, ctx)).to_double(), 1.0, 0.01);
}

TEST(HardyRamanujan, RejectsSingularPoint) {
  EXPECT_THROW(hr_estimate(1, make_context(30)), InvalidArgument);
  EXPECT_NO_THROW(hr_estimate(2, make_context(30)));
}
