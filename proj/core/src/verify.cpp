#include "qseries/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "qseries/error.hpp"
#include "qseries/parallel.hpp"

namespace qseries {

namespace {

using SeriesCache = std::map<std::string, Real>;

const Real& series_value(const SeriesSpec& spec, const PrecisionContext& ctx, SeriesCache& cache) {
  const std::string key = to_string(spec);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, evaluate(spec, ctx)).first;
  return it->second;
}

PrecisionContext comparison_context(const Identity& identity, const PrecisionContext& ctx) {
  if (identity.kind.exact) return ctx;
  return ctx.with_digits(std::max(ctx.decimal_digits(), identity.kind.expected_digits + 40));
}

bool passes(const Identity& identity, double digits, const PrecisionContext& ctx) {
  if (identity.kind.exact) return digits >= ctx.decimal_digits() - ctx.guard_digits();
  const int expected = identity.kind.expected_digits;
  return digits >= expected - 2 && digits <= expected + 8;
}

VerificationReport evaluate_candidate(const Identity& identity, std::size_t index, const PrecisionContext& ctx,
                                      SeriesCache& cache) {
  const Candidate& c = identity.candidates.at(index);
  const auto start = std::chrono::steady_clock::now();

  Real lhs = c.lhs.evaluate(ctx);
  const mpfr_prec_t bits = std::max(lhs.precision(), ctx.bits() + 64);
  Real rhs(bits);
  Real largest_term(bits);
  if (c.combination == Combination::linear) {
    for (const Term& t : c.terms) {
      Real term = series_value(t.spec, ctx, cache) * Real(t.coefficient, bits);
      if (abs(term) > largest_term) largest_term = abs(term);
      rhs += term;
    }
  } else {
    rhs = Real(1, bits);
    for (const Term& t : c.terms) {
      rhs *= pow(series_value(t.spec, ctx, cache), static_cast<long>(t.power));
      if (t.coefficient != 1) rhs *= Real(t.coefficient, bits);
    }
  }

  // Vanishing combinations are measured against their cancellation mass.
  Real scale = (c.lhs.is_literal() && c.lhs.literal_value() == 0) ? largest_term : abs(lhs);
  if (scale < Real(1, bits)) scale = Real(1, bits);

  VerificationReport report;
  report.id = identity.id;
  report.kind = identity.kind;
  report.candidate = c.label;
  report.as_printed = c.as_printed;
  report.context_digits = ctx.decimal_digits();
  report.digits_agree = digits_of_agreement(lhs, rhs, scale, ctx.decimal_digits());
  report.passed = passes(identity, report.digits_agree, ctx);
  report.status = !report.passed ? VerificationStatus::failed
                  : c.as_printed ? VerificationStatus::verified
                                 : VerificationStatus::corrected;
  report.lhs_value = std::move(lhs);
  report.rhs_value = std::move(rhs);
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

std::string_view to_string(VerificationStatus status) {
  switch (status) {
    case VerificationStatus::verified: return "verified";
    case VerificationStatus::corrected: return "corrected";
    case VerificationStatus::failed: return "failed";
  }
  return "?";
}

double digits_of_agreement(const Real& lhs, const Real& rhs, const Real& scale, int max_digits) {
  const Real diff = abs(lhs - rhs);
  if (diff.is_zero()) return max_digits;
  const double digits = -(diff.log10_abs() - scale.log10_abs());
  return std::clamp(digits, 0.0, static_cast<double>(max_digits));
}

VerificationReport verify_candidate(const Identity& identity, std::size_t candidate, const PrecisionContext& ctx) {
  SeriesCache cache;
  return evaluate_candidate(identity, candidate, comparison_context(identity, ctx), cache);
}

VerificationReport verify(const Identity& identity, const PrecisionContext& ctx) {
  if (ctx.decimal_digits() < 30) throw InvalidArgument("verification needs at least 30 digits");
  const auto start = std::chrono::steady_clock::now();
  const PrecisionContext work = comparison_context(identity, ctx);
  SeriesCache cache;
  std::optional<VerificationReport> best;
  for (std::size_t i = 0; i < identity.candidates.size(); ++i) {
    VerificationReport r = evaluate_candidate(identity, i, work, cache);
    if (r.passed) {
      best = std::move(r);
      break;
    }
    if (!best || r.digits_agree > best->digits_agree) best = std::move(r);
  }
  best->wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return std::move(*best);
}

std::vector<BatchEntry> verify_all(std::span<const Identity> registry, std::span<const std::string> ids,
                                   const PrecisionContext& ctx, unsigned threads) {
  std::vector<std::string> wanted(ids.begin(), ids.end());
  if (wanted.empty()) {
    for (const Identity& identity : registry) wanted.push_back(identity.id);
  }
  return parallel_map<BatchEntry>(wanted.size(), threads, [&](std::size_t i) {
    BatchEntry entry;
    entry.id = wanted[i];
    const Identity* identity = find_identity(registry, entry.id);
    if (!identity) {
      entry.error = "unknown identity id";
      return entry;
    }
    try {
      entry.report = verify(*identity, ctx);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    return entry;
  });
}

bool passes_exactness_test(const Identity& identity, int digits) {
  const PrecisionContext ctx = make_context(digits + 40);
  SeriesCache cache;
  double best = 0.0;
  for (std::size_t i = 0; i < identity.candidates.size(); ++i) {
    best = std::max(best, evaluate_candidate(identity, i, ctx, cache).digits_agree);
  }
  return best >= digits;
}

}  // namespace qseries
