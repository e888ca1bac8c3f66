#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "qseries/identity.hpp"
#include "qseries/precision.hpp"
#include "qseries/rational.hpp"
#include "qseries/real.hpp"

namespace qseries {

struct RelationProblem {
  std::vector<Real> values;
  int max_coeff_digits = 6;
  PrecisionContext ctx = make_context(100);
};

/// Integer vector with sum c_i v_i ~ 0, gcd 1, first nonzero entry positive.
struct Relation {
  std::vector<BigInt> coefficients;
  Real residual{64};  ///< |sum c_i v_i|
  std::size_t iterations = 0;
};

/// No relation with Euclidean norm below `bound` exists.
struct NoRelation {
  Real bound{64};
  std::size_t iterations = 0;
};

using RelationResult = std::variant<Relation, NoRelation>;

/// Divides out the gcd and makes the first nonzero entry positive.
std::vector<BigInt> normalize_relation(std::vector<BigInt> coefficients);

/// PSLQ (gamma = sqrt(4/3)). Returns a Relation once some |y_j| drops below
/// 10^-decimal_digits and the residual is below 10^-(decimal_digits - guard);
/// NoRelation once the norm bound exceeds sqrt(m) 10^max_coeff_digits.
/// Throws PrecisionTooLow when neither happens within 10 m^3 iterations or
/// the integer matrix outgrows the working precision.
RelationResult pslq(const RelationProblem& problem);

struct Rediscovery {
  std::string id;
  std::string candidate;              ///< registry candidate the values come from
  Relation relation;                  ///< canonical form
  std::vector<BigInt> oriented;       ///< relation with the lhs coefficient negative
  std::vector<BigInt> expected;       ///< registry coefficients, denominators cleared, same orientation
  bool matches = false;               ///< false flags a discrepancy with the registry
};

/// Runs pslq on [lhs, series terms...] of an exact linear identity. The
/// candidate is the one verify() selects.
Rediscovery rediscover(std::span<const Identity> registry, std::string_view id, const PrecisionContext& ctx);

/// Registry coefficients of a linear candidate as an integer vector
/// (-d, d c_1, ..., d c_k) with d the lcm of the denominators.
std::vector<BigInt> registry_relation(const Candidate& candidate);

}  // namespace qseries
