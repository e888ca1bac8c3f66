#include "qseries/arith.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "qseries/error.hpp"

namespace qseries {

namespace {

void check_sigma_order(int k) {
  if (k != 1 && k != 3 && k != 7 && k != 11) {
    throw InvalidArgument("sigma order must be 1, 3, 7 or 11, got " + std::to_string(k));
  }
}

BigInt ipow(std::int64_t base, int exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return out;
}

int order_slot(int k) {
  switch (k) {
    case 1: return 0;
    case 3: return 1;
    case 7: return 2;
    default: return 3;
  }
}

struct SigmaCache {
  std::shared_mutex mutex;
  std::shared_ptr<const std::vector<BigInt>> table;
};

std::array<SigmaCache, 4>& sigma_caches() {
  static std::array<SigmaCache, 4> caches;
  return caches;
}

}  // namespace

BigInt sigma_pow(int k, std::int64_t n) {
  check_sigma_order(k);
  if (n < 1) throw InvalidArgument("sigma_pow requires n >= 1, got " + std::to_string(n));
  BigInt sum = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += ipow(d, k);
    const std::int64_t e = n / d;
    if (e != d) sum += ipow(e, k);
  }
  return sum;
}

std::vector<BigInt> sigma_table(int k, std::int64_t count) {
  check_sigma_order(k);
  if (count < 1) throw InvalidArgument("sigma_table requires N >= 1");
  std::vector<BigInt> table(static_cast<std::size_t>(count));
  for (std::int64_t d = 1; d <= count; ++d) {
    const BigInt power = ipow(d, k);
    for (std::int64_t m = d; m <= count; m += d) table[static_cast<std::size_t>(m - 1)] += power;
  }
  return table;
}

std::shared_ptr<const std::vector<BigInt>> cached_sigma_table(int k, std::int64_t count) {
  check_sigma_order(k);
  SigmaCache& cache = sigma_caches()[static_cast<std::size_t>(order_slot(k))];
  {
    std::shared_lock lock(cache.mutex);
    if (cache.table && static_cast<std::int64_t>(cache.table->size()) >= count) return cache.table;
  }
  std::unique_lock lock(cache.mutex);
  if (cache.table && static_cast<std::int64_t>(cache.table->size()) >= count) return cache.table;
  std::int64_t size = cache.table ? static_cast<std::int64_t>(cache.table->size()) : 256;
  while (size < count) size *= 2;
  cache.table = std::make_shared<const std::vector<BigInt>>(sigma_table(k, size));
  return cache.table;
}

std::vector<BigInt> partition_oracle(std::int64_t n) {
  if (n < 0) throw InvalidArgument("partition_oracle requires N >= 0");
  std::vector<BigInt> p(static_cast<std::size_t>(n + 1));
  p[0] = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    BigInt acc = 0;
    // Generalized pentagonal numbers j(3j-1)/2 for j = 1, -1, 2, -2, ...
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const bool plus = (j % 2) == 1;
      const BigInt& a = p[static_cast<std::size_t>(m - g1)];
      if (plus) acc += a; else acc -= a;
      const std::int64_t g2 = j * (3 * j + 1) / 2;
      if (g2 <= m) {
        const BigInt& b = p[static_cast<std::size_t>(m - g2)];
        if (plus) acc += b; else acc -= b;
      }
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p;
}

std::int64_t totient(std::int64_t n) {
  if (n < 1) throw InvalidArgument("totient requires n >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Rational> farey(std::int64_t order) {
  if (order < 1) throw InvalidArgument("farey order must be >= 1");
  // Next-term recurrence starting from 0/1, 1/order.
  std::vector<Rational> out;
  std::int64_t a = 0, b = 1, c = 1, d = order;
  while (c <= order) {
    const std::int64_t k = (order + b) / d;
    const std::int64_t na = c, nb = d;
    const std::int64_t nc = k * c - a, nd = k * d - b;
    a = na;
    b = nb;
    c = nc;
    d = nd;
    out.emplace_back(static_cast<long>(a), static_cast<long>(b));
    if (a == b) break;
  }
  return out;
}

RationalApproximation nearest_rational(const Real& x, std::int64_t max_denominator) {
  if (!x.is_finite()) throw InvalidArgument("nearest_rational requires a finite value");
  if (max_denominator < 1) throw InvalidArgument("max_denominator must be >= 1");
  const mpfr_prec_t bits = x.precision();
  const BigInt max_den(static_cast<long>(max_denominator));

  // Convergents p0/q0 (previous) and p1/q1 (current).
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Real y = x;
  for (int guard = 0; guard < 4096; ++guard) {
    const BigInt a = floor_integer(y);
    const BigInt q2 = q0 + a * q1;
    if (q2 > max_den) break;
    const BigInt p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Real rem = y - Real(a, bits);
    if (rem.is_zero()) break;
    y = Real(1, bits) / rem;
  }

  const Rational convergent(p1, q1);
  const BigInt k = (max_den - q0) / q1;
  const Rational semiconvergent(p0 + k * p1, q0 + k * q1);

  Real d_conv = abs(x - Real(convergent, bits));
  Real d_semi = abs(x - Real(semiconvergent, bits));
  // The convergent has the smaller denominator, so it wins ties.
  if (d_semi < d_conv) return {semiconvergent, std::move(d_semi)};
  return {convergent, std::move(d_conv)};
}

}  // namespace qseries
