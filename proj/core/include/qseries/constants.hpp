#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "qseries/precision.hpp"
#include "qseries/real.hpp"

namespace qseries {

enum class NamedConstant {
  pi,
  e_pi,
  phi,
  ln2,
  ln_pi,
  gamma_quarter,
  gamma_three_quarter,
  sqrt2,
  sqrt5,
  sqrt7,
  root4_7,
  root4_343,
  zeta3,
  zeta5,
  zeta7,
  catalan,
};

std::span<const NamedConstant> all_constants();
std::string_view constant_name(NamedConstant c);
std::optional<NamedConstant> constant_from_name(std::string_view name);

/// Value of a named constant accurate to the context's decimal digits.
///
/// The zeta values and Catalan's constant come from an accelerated
/// alternating series, independent of any Lambert-series identity.
Real constant(NamedConstant c, const PrecisionContext& ctx);

namespace detail {
/// Alternating-series acceleration (Cohen, Rodriguez Villegas, Zagier) for
/// sum_{k>=0} (-1)^k a(k). Used for eta(s) and Catalan's constant.
Real dirichlet_eta(unsigned s, mpfr_prec_t bits);
Real catalan_series(mpfr_prec_t bits);
}  // namespace detail

}  // namespace qseries
