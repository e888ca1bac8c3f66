#include <gtest/gtest.h>

#include <numeric>
#include <thread>

#include "oracles.hpp"
#include "qseries/arith.hpp"
#include "qseries/error.hpp"

using namespace qseries;

TEST(Sigma, MatchesTrialDivision) {
  for (int k : {1, 3, 7, 11}) {
    const std::vector<BigInt> table = sigma_table(k, 300);
    for (long n = 1; n <= 300; ++n) {
      EXPECT_EQ(table[n - 1], oracle::sigma(k, n)) << "k=" << k << " n=" << n;
      EXPECT_EQ(sigma_pow(k, n), table[n - 1]);
    }
  }
}

TEST(Sigma, RejectsOtherOrders) {
  EXPECT_THROW(sigma_pow(2, 10), InvalidArgument);
  EXPECT_THROW(sigma_pow(1, 0), InvalidArgument);
}

TEST(Sigma, CachedTableIsSharedAndGrows) {
  const auto small = cached_sigma_table(3, 10);
  ASSERT_GE(small->size(), 10u);
  const auto large = cached_sigma_table(3, 5000);
  ASSERT_GE(large->size(), 5000u);
  EXPECT_EQ((*large)[4999], oracle::sigma(3, 5000));

  std::vector<std::thread> pool;
  std::vector<BigInt> seen(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] { seen[t] = (*cached_sigma_table(7, 1000 + 700 * t))[999]; });
  }
  for (auto& th : pool) th.join();
  for (const BigInt& v : seen) EXPECT_EQ(v, oracle::sigma(7, 1000));
}

TEST(Partitions, PentagonalMatchesCoinChange) {
  const std::vector<BigInt> pentagonal = partition_oracle(400);
  const std::vector<BigInt> table = oracle::partitions(400);
  EXPECT_EQ(pentagonal, table);
}

TEST(Partitions, KnownValues) {
  const std::vector<BigInt> p = partition_oracle(200);
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p[5], 7);
  EXPECT_EQ(p[100], BigInt("190569292"));
  EXPECT_EQ(p[200], BigInt("3972999029388"));
}

TEST(Totient, MatchesGcdCount) {
  for (long n = 1; n <= 500; ++n) {
    long count = 0;
    for (long k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    EXPECT_EQ(totient(n), count) << n;
  }
}

TEST(Farey, SizeAndOrder) {
  for (long order : {1L, 2L, 7L, 20L, 163L}) {
    const std::vector<Rational> f = farey(order);
    long expected = 0;
    for (long q = 1; q <= order; ++q) expected += totient(q);
    EXPECT_EQ(static_cast<long>(f.size()), expected) << order;
    EXPECT_EQ(f.back(), Rational(1));
    EXPECT_EQ(f.front(), Rational(1, order));
    for (std::size_t i = 1; i < f.size(); ++i) {
      EXPECT_LT(f[i - 1], f[i]);
      // Neighbours satisfy bc - ad = 1.
      const BigInt det = f[i].get_num() * f[i - 1].get_den() - f[i - 1].get_num() * f[i].get_den();
      EXPECT_EQ(det, 1);
    }
  }
  EXPECT_THROW(farey(0), InvalidArgument);
}

TEST(NearestRational, MatchesExhaustiveScan) {
  const mpfr_prec_t bits = 200;
  const std::vector<std::string> samples{"3.14159265358979323846", "0.333333333", "2.718281828459045",
                                         "-1.41421356237309504880", "0.0001234", "10.0000000000000000190"};
  for (const std::string& text : samples) {
    const Real x = Real::parse(text, bits);
    for (long max_den : {1L, 7L, 100L, 1000L}) {
      Real best_distance = abs(x - Real(nearest_integer(x), bits));
      for (long q = 1; q <= max_den; ++q) {
        const BigInt p = nearest_integer(x * q);
        Rational r(p, q);
        r.canonicalize();
        const Real d = abs(x - Real(r, bits));
        if (d < best_distance) best_distance = d;
      }
      const RationalApproximation got = nearest_rational(x, max_den);
      EXPECT_LE(got.fraction.get_den(), max_den);
      EXPECT_EQ(got.distance, best_distance) << text << " " << max_den;
      EXPECT_EQ(abs(x - Real(got.fraction, bits)), got.distance);
    }
  }
}

TEST(NearestRational, RejectsBadInput) {
  EXPECT_THROW(nearest_rational(Real(1, 64), 0), InvalidArgument);
  Real nan(64);
  mpfr_set_nan(nan.get());
  EXPECT_THROW(nearest_rational(nan, 10), InvalidArgument);
}

TEST(Sigma, SieveAgreesWithDirectToTenThousand) {
  for (int k : {1, 3}) {
    const std::vector<BigInt> table = sigma_table(k, 10000);
    for (long n = 1; n <= 10000; ++n) ASSERT_EQ(table[n - 1], sigma_pow(k, n)) << k << " " << n;
  }
}

TEST(Partitions, RecurrenceResidualIsZero) {
  // sum_k (-1)^k p(n - k(3k-1)/2) over all generalized pentagonal k vanishes for n >= 1.
  const std::vector<BigInt> p = partition_oracle(500);
  for (long n = 1; n <= 500; ++n) {
    BigInt residual = p[n];
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = k % 2 ? -1 : 1;
      residual += sign * p[n - g1];
      if (g2 <= n) residual += sign * p[n - g2];
    }
    EXPECT_EQ(residual, 0) << n;
  }
}

TEST(Farey, SmallOrders) {
  EXPECT_EQ(farey(2), (std::vector<Rational>{Rational(1, 2), Rational(1)}));
  EXPECT_EQ(farey(3), (std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)}));
  long count = 1;
  for (long q = 2; q <= 60; ++q) count += totient(q);
  EXPECT_EQ(static_cast<long>(farey(60).size()), count);
}

TEST(NearestRational, Examples) {
  const mpfr_prec_t bits = 300;
  const RationalApproximation half = nearest_rational(Real::parse("0.5", bits), 10);
  EXPECT_EQ(half.fraction, Rational(1, 2));
  EXPECT_TRUE(half.distance.is_zero());

  const RationalApproximation ten = nearest_rational(Real::parse("10.0000000000000000190161767888663", bits), 1);
  EXPECT_EQ(ten.fraction, Rational(10));
  EXPECT_NEAR(ten.distance.log10_abs(), std::log10(1.90161767888663e-17), 1e-9);

  Real p(bits);
  mpfr_const_pi(p.get(), MPFR_RNDN);
  const RationalApproximation best = nearest_rational(p, 120);
  EXPECT_EQ(best.fraction, Rational(355, 113));
  EXPECT_NEAR(best.distance.to_double(), 2.667e-7, 1e-10);
}
