#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qseries/identity.hpp"
#include "qseries/precision.hpp"
#include "qseries/real.hpp"

namespace qseries {

enum class VerificationStatus {
  verified,   ///< passed with the form as printed
  corrected,  ///< passed only with a reconstructed candidate (flagged)
  failed,
};

struct VerificationReport {
  std::string id;
  IdentityKind kind;
  std::string candidate;  ///< label of the selected candidate
  bool as_printed = true;
  VerificationStatus status = VerificationStatus::failed;
  Real lhs_value{64};
  Real rhs_value{64};
  double digits_agree = 0.0;
  bool passed = false;
  double wall_time = 0.0;  ///< seconds
  int context_digits = 0;  ///< decimal digits the comparison was made at

  bool flagged() const { return status == VerificationStatus::corrected; }
};

std::string_view to_string(VerificationStatus status);

/// Agreement in decimal digits: -log10(|lhs - rhs| / scale), clamped to
/// [0, max_digits]. Identical values give max_digits.
double digits_of_agreement(const Real& lhs, const Real& rhs, const Real& scale, int max_digits);

/// Evaluates every candidate of the identity and reports the first one that
/// passes (the best one when none does). Exact identities pass at
/// digits_agree >= decimal_digits - guard_digits; approximate ones when
/// digits_agree lies in [expected - 2, expected + 8]. Approximate identities
/// are evaluated at no fewer than expected + 40 digits.
VerificationReport verify(const Identity& identity, const PrecisionContext& ctx);

/// Single candidate, no selection.
VerificationReport verify_candidate(const Identity& identity, std::size_t candidate, const PrecisionContext& ctx);

struct BatchEntry {
  std::string id;
  std::optional<VerificationReport> report;
  std::string error;  ///< set when report is empty
};

/// One entry per requested id (all registry ids when `ids` is empty), order
/// preserved. Unknown ids and evaluation failures become error entries.
std::vector<BatchEntry> verify_all(std::span<const Identity> registry, std::span<const std::string> ids,
                                   const PrecisionContext& ctx, unsigned threads = 1);

/// True when the best candidate agrees to at least `digits` digits, measured
/// at digits + 40. Approximate identities are expected to fail this.
bool passes_exactness_test(const Identity& identity, int digits);

}  // namespace qseries
