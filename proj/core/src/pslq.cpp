#include "qseries/pslq.hpp"

#include <algorithm>
#include <cmath>

#include "qseries/error.hpp"
#include "qseries/verify.hpp"

namespace qseries {

std::vector<BigInt> normalize_relation(std::vector<BigInt> c) {
  BigInt g = 0;
  for (const BigInt& v : c) g = gcd(g, v);
  if (g == 0) return c;
  const auto first = std::find_if(c.begin(), c.end(), [](const BigInt& v) { return v != 0; });
  if (*first < 0) g = -g;
  for (BigInt& v : c) v /= g;
  return c;
}

RelationResult pslq(const RelationProblem& problem) {
  const std::size_t m = problem.values.size();
  const PrecisionContext& ctx = problem.ctx;
  if (m < 2) throw InvalidArgument("pslq needs at least two values");
  if (problem.max_coeff_digits < 1) throw InvalidArgument("max_coeff_digits must be positive");
  if (ctx.decimal_digits() < 20 + static_cast<int>(m) * problem.max_coeff_digits) {
    throw InvalidArgument("pslq needs at least 20 + m * max_coeff_digits digits");
  }
  for (const Real& v : problem.values) {
    if (!v.is_finite() || v.is_zero()) throw InvalidArgument("pslq values must be finite and nonzero");
  }

  const mpfr_prec_t bits = ctx.bits();
  const Real gamma = sqrt(Real(Rational(4, 3), bits));
  const Real detect = pow10(-ctx.decimal_digits(), bits);
  const Real bound_limit = sqrt(Real(static_cast<long>(m), bits)) * pow10(problem.max_coeff_digits, bits);
  // Entries of A beyond this size mean the iteration has used up the precision.
  const double max_entry_digits = ctx.working_digits() - 5;

  std::vector<Real> x;
  Real norm(bits);
  for (const Real& v : problem.values) {
    x.push_back(v.rounded(bits));
    norm += x.back() * x.back();
  }
  norm = sqrt(norm);
  for (Real& xi : x) xi /= norm;

  std::vector<Real> s(m, Real(bits));
  Real acc(bits);
  for (std::size_t k = m; k-- > 0;) {
    acc += x[k] * x[k];
    s[k] = sqrt(acc);
  }

  // H is m x (m-1), lower trapezoidal.
  std::vector<std::vector<Real>> H(m, std::vector<Real>(m - 1, Real(bits)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m - 1 && j <= i; ++j) {
      if (i == j) {
        H[i][j] = s[j + 1] / s[j];
      } else {
        H[i][j] = -(x[i] * x[j]) / (s[j] * s[j + 1]);
      }
    }
  }

  std::vector<std::vector<BigInt>> A(m, std::vector<BigInt>(m, 0));
  std::vector<std::vector<BigInt>> B(m, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < m; ++i) A[i][i] = B[i][i] = 1;
  std::vector<Real> y = x;

  const auto reduce = [&](std::size_t i, std::size_t j) {
    const BigInt t = nearest_integer(H[i][j] / H[j][j]);
    if (t == 0) return;
    const Real tr(t, bits);
    y[j] += tr * y[i];
    for (std::size_t k = 0; k <= j; ++k) H[i][k] -= tr * H[j][k];
    for (std::size_t k = 0; k < m; ++k) {
      A[i][k] -= t * A[j][k];
      B[k][j] += t * B[k][i];
    }
  };

  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = std::min(i - 1, m - 2) + 1; j-- > 0;) reduce(i, j);
  }

  const std::size_t max_iterations = 10 * m * m * m;
  for (std::size_t iteration = 1; iteration <= max_iterations; ++iteration) {
    std::size_t r = 0;
    Real best(bits);
    Real gpow = gamma;
    for (std::size_t i = 0; i < m - 1; ++i) {
      Real score = gpow * abs(H[i][i]);
      if (score > best) {
        best = std::move(score);
        r = i;
      }
      gpow *= gamma;
    }

    std::swap(y[r], y[r + 1]);
    std::swap(A[r], A[r + 1]);
    std::swap(H[r], H[r + 1]);
    for (std::size_t k = 0; k < m; ++k) std::swap(B[k][r], B[k][r + 1]);

    if (r < m - 2) {
      const Real t0 = sqrt(H[r][r] * H[r][r] + H[r][r + 1] * H[r][r + 1]);
      const Real t1 = H[r][r] / t0;
      const Real t2 = H[r][r + 1] / t0;
      for (std::size_t i = r; i < m; ++i) {
        const Real t3 = H[i][r];
        const Real t4 = H[i][r + 1];
        H[i][r] = t1 * t3 + t2 * t4;
        H[i][r + 1] = t1 * t4 - t2 * t3;
      }
    }

    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = std::min(i - 1, r + 1) + 1; j-- > 0;) reduce(i, j);
    }

    Real max_diag(bits);
    for (std::size_t j = 0; j < m - 1; ++j) max_diag = std::max(max_diag, abs(H[j][j]));

    for (std::size_t j = 0; j < m; ++j) {
      if (!(abs(y[j]) < detect)) continue;
      std::vector<BigInt> c(m);
      for (std::size_t k = 0; k < m; ++k) c[k] = B[k][j];
      c = normalize_relation(std::move(c));
      Real residual(bits);
      for (std::size_t k = 0; k < m; ++k) residual += Real(c[k], bits) * problem.values[k];
      residual = abs(residual);
      if (residual.is_zero() || -residual.log10_abs() >= ctx.decimal_digits() - ctx.guard_digits()) {
        return Relation{std::move(c), std::move(residual), iteration};
      }
    }

    if (!max_diag.is_zero()) {
      Real bound = Real(1, bits) / max_diag;
      if (bound > bound_limit) return NoRelation{std::move(bound), iteration};
    }

    for (const auto& row : A) {
      for (const BigInt& a : row) {
        if (a != 0 && mpz_sizeinbase(a.get_mpz_t(), 10) > max_entry_digits) {
          throw PrecisionTooLow("pslq exhausted the working precision after " + std::to_string(iteration) +
                                " iterations");
        }
      }
    }
  }
  throw PrecisionTooLow("pslq reached the iteration cap (" + std::to_string(max_iterations) +
                        ") without a decision; raise the precision or lower max_coeff_digits");
}

std::vector<BigInt> registry_relation(const Candidate& candidate) {
  if (candidate.combination != Combination::linear) throw InvalidArgument("only linear identities have relations");
  BigInt d = 1;
  for (const Term& t : candidate.terms) d = lcm(d, BigInt(t.coefficient.get_den()));
  std::vector<BigInt> out{BigInt(-d)};
  for (const Term& t : candidate.terms) {
    out.push_back(BigInt(t.coefficient.get_num() * (d / t.coefficient.get_den())));
  }
  return out;
}

Rediscovery rediscover(std::span<const Identity> registry, std::string_view id, const PrecisionContext& ctx) {
  const Identity* identity = find_identity(registry, id);
  if (!identity) throw InvalidArgument("unknown identity id " + std::string(id));
  if (!identity->kind.exact) throw InvalidArgument("identity " + identity->id + " is approximate");

  const VerificationReport report = verify(*identity, ctx);
  const auto chosen = std::find_if(identity->candidates.begin(), identity->candidates.end(),
                                   [&](const Candidate& c) { return c.label == report.candidate; });
  const Candidate& candidate = *chosen;
  if (candidate.combination != Combination::linear) {
    throw InvalidArgument("identity " + identity->id + " is a product identity");
  }
  if (candidate.lhs.is_literal() && candidate.lhs.literal_value() == 0) {
    throw InvalidArgument("identity " + identity->id + " has no closed side");
  }

  Rediscovery out;
  out.id = identity->id;
  out.candidate = candidate.label;
  out.expected = registry_relation(candidate);

  std::size_t widest = 1;
  for (const BigInt& c : out.expected) widest = std::max(widest, mpz_sizeinbase(c.get_mpz_t(), 10));

  RelationProblem problem;
  problem.ctx = ctx;
  problem.max_coeff_digits = static_cast<int>(widest) + 1;
  problem.values.push_back(candidate.lhs.evaluate(ctx));
  for (const Term& t : candidate.terms) problem.values.push_back(evaluate(t.spec, ctx));

  RelationResult result = pslq(problem);
  if (auto* none = std::get_if<NoRelation>(&result)) {
    throw PrecisionTooLow("no relation found for " + identity->id + " (norm bound " + none->bound.to_scientific(6) +
                          ")");
  }
  out.relation = std::get<Relation>(std::move(result));
  out.oriented = out.relation.coefficients;
  if (out.oriented[0] > 0) {
    for (BigInt& c : out.oriented) c = -c;
  }
  out.matches = out.oriented == out.expected;
  return out;
}

}  // namespace qseries
