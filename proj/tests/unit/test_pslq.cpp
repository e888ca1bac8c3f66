#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qseries/constants.hpp"
#include "qseries/error.hpp"
#include "qseries/pslq.hpp"
#include "qseries/series.hpp"

using namespace qseries;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Relation expect_relation(const RelationResult& result) {
  const auto* rel = std::get_if<Relation>(&result);
  if (!rel) {
    ADD_FAILURE() << "no relation, bound " << std::get<NoRelation>(result).bound.to_scientific(6);
    return {};
  }
  return *rel;
}

double double_residual(const Relation& r, const std::vector<Real>& values) {
  double sum = 0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += r.coefficients[i].get_d() * values[i].to_double();
  return std::abs(sum);
}

}  // namespace

TEST(Pslq, TrivialPair) {
  const PrecisionContext ctx = make_context(50);
  const Relation r = expect_relation(pslq({{Real(1, ctx.bits()), Real(2, ctx.bits())}, 3, ctx}));
  EXPECT_EQ(r.coefficients, ints({2, -1}));
}

TEST(Pslq, FirstLambertIdentity) {
  const PrecisionContext ctx = make_context(100);
  const Rational one(1), two(2), four(4);
  std::vector<Real> values{constant(NamedConstant::pi, ctx), lambert(1, one, ctx), lambert(1, two, ctx),
                           lambert(1, four, ctx)};
  const Relation r = expect_relation(pslq({values, 4, ctx}));
  EXPECT_EQ(r.coefficients, ints({1, -72, 96, -24}));
  EXPECT_LT(double_residual(r, values), 1e-12);
  EXPECT_LT(r.residual.log10_abs(), -(ctx.decimal_digits() - ctx.guard_digits()));
}

TEST(Pslq, SurdsHaveNoSmallRelation) {
  const PrecisionContext ctx = make_context(100);
  const mpfr_prec_t bits = ctx.bits();
  const RelationResult result = pslq({{Real(1, bits), sqrt(Real(2, bits)), sqrt(Real(3, bits))}, 6, ctx});
  ASSERT_TRUE(std::holds_alternative<NoRelation>(result));
  EXPECT_GE(std::get<NoRelation>(result).bound.to_double(), 1e6);

  // Exhaustive check below 10^3: c0 + c1 sqrt 2 + c2 sqrt 3 never vanishes.
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  double smallest = 1;
  for (int c1 = -1000; c1 <= 1000; ++c1) {
    for (int c2 = -1000; c2 <= 1000; ++c2) {
      if (c1 == 0 && c2 == 0) continue;
      const double t = c1 * r2 + c2 * r3;
      smallest = std::min(smallest, std::abs(t - std::round(t)));
    }
  }
  EXPECT_GT(smallest, 1e-9);
}

TEST(Pslq, NormalizationIsCanonicalUnderPermutation) {
  const PrecisionContext ctx = make_context(100);
  const Rational one(1), two(2), four(4);
  std::vector<Real> values{constant(NamedConstant::pi, ctx), lambert(1, one, ctx), lambert(1, two, ctx),
                           lambert(1, four, ctx)};
  const std::vector<BigInt> base = expect_relation(pslq({values, 4, ctx})).coefficients;
  std::vector<std::size_t> order{0, 1, 2, 3};
  while (std::next_permutation(order.begin(), order.end())) {
    std::vector<Real> permuted;
    std::vector<BigInt> expected;
    for (std::size_t i : order) {
      permuted.push_back(values[i]);
      expected.push_back(base[i]);
    }
    EXPECT_EQ(expect_relation(pslq({permuted, 4, ctx})).coefficients, normalize_relation(expected));
  }
}

TEST(Pslq, RecoversRandomRelations) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> coefficient(-500, 500);
  const PrecisionContext ctx = make_context(120);
  const mpfr_prec_t bits = ctx.bits();
  gmp_randstate_t uniform;
  gmp_randinit_default(uniform);
  gmp_randseed_ui(uniform, 7);
  int recovered = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 3 + trial % 4;
    std::vector<BigInt> c(m);
    for (BigInt& v : c) v = coefficient(rng);
    while (c.back() == 0) c.back() = coefficient(rng);
    std::vector<Real> values;
    Real partial(bits);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      Real v(bits);
      mpfr_urandomb(v.get(), uniform);
      v += Real(1, bits);
      partial += Real(c[i], bits) * v;
      values.push_back(std::move(v));
    }
    values.push_back(-partial / Real(c.back(), bits));
    const RelationResult result = pslq({values, 3, ctx});
    if (const auto* r = std::get_if<Relation>(&result); r && r->coefficients == normalize_relation(c)) ++recovered;
  }
  gmp_randclear(uniform);
  EXPECT_EQ(recovered, 20);
}

TEST(Pslq, NormalizeRelation) {
  EXPECT_EQ(normalize_relation(ints({-4, 6, 0, 2})), ints({2, -3, 0, -1}));
  EXPECT_EQ(normalize_relation(ints({0, -5, 10})), ints({0, 1, -2}));
}

TEST(Pslq, RejectsBadProblems) {
  const PrecisionContext ctx = make_context(60);
  const mpfr_prec_t bits = ctx.bits();
  EXPECT_THROW(pslq({{Real(1, bits)}, 3, ctx}), InvalidArgument);
  EXPECT_THROW(pslq({{Real(1, bits), Real(bits)}, 3, ctx}), InvalidArgument);
  EXPECT_THROW(pslq({{Real(1, bits), Real(2, bits)}, 30, ctx}), InvalidArgument);
}

TEST(Pslq, HitsTheIterationCap) {
  // The golden ratio's continued fraction grows slowest of all; 80 iterations
  // exclude coefficients up to about 10^32 and no further.
  const PrecisionContext ctx = make_context(100);
  const std::vector<Real> values{Real(1, ctx.bits()), constant(NamedConstant::phi, ctx)};
  EXPECT_THROW(pslq({values, 34, ctx}), PrecisionTooLow);
  EXPECT_TRUE(std::holds_alternative<NoRelation>(pslq({values, 32, ctx})));
}

TEST(Rediscover, RecoversPrintedCoefficients) {
  const PrecisionContext ctx = make_context(120);
  const auto check = [&](const char* id, std::vector<BigInt> expected) {
    const Rediscovery r = rediscover(builtin_registry(), id, ctx);
    EXPECT_TRUE(r.matches) << id;
    EXPECT_EQ(r.oriented, expected) << id;
    EXPECT_EQ(r.expected, expected) << id;
  };
  check("1.1", ints({-1, 72, -96, 24}));
  check("1.2", ints({-1, 8, -40, 32}));
  check("1.4", ints({-1, 28, -37, 7}));
  check("1.6", ints({-10, 240, -259, -1}));
  check("1.8", ints({-52, 1216, -1339, 19}));
}

TEST(Rediscover, UsesTheReconstructedCandidate) {
  const Rediscovery r = rediscover(builtin_registry(), "1.5", make_context(120));
  EXPECT_TRUE(r.matches);
  EXPECT_EQ(r.candidate, "third coefficient -63");
  EXPECT_EQ(r.oriented, ints({-1, 7056, -6993, -63}));
}

TEST(Rediscover, RejectsUnsuitableIdentities) {
  const PrecisionContext ctx = make_context(120);
  EXPECT_THROW(rediscover(builtin_registry(), "9.9", ctx), InvalidArgument);
  EXPECT_THROW(rediscover(builtin_registry(), "2.27", ctx), InvalidArgument);
  EXPECT_THROW(rediscover(builtin_registry(), "2.8", ctx), InvalidArgument);
}

TEST(RegistryRelation, ClearsDenominators) {
  const Candidate& c = find_identity(builtin_registry(), "1.7")->candidates.front();
  EXPECT_EQ(registry_relation(c), ints({-13, 907200, -921375, 14175}));
}
