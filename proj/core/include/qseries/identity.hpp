#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/closed_form.hpp"
#include "qseries/rational.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// One summand (linear) or factor (product) of an identity's series side.
struct Term {
  Rational coefficient = 1;
  SeriesSpec spec;
  int power = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Combination { linear, product };

/// One typographic reading of an identity. The first candidate of every
/// identity is the form as printed; further candidates are reconstructions
/// for garbled or ambiguous typesetting.
struct Candidate {
  std::string label;
  bool as_printed = true;
  ClosedForm lhs;
  Combination combination = Combination::linear;
  std::vector<Term> terms;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct IdentityKind {
  bool exact = true;
  int expected_digits = 0;  ///< approximate identities only

  static IdentityKind make_exact() { return {true, 0}; }
  static IdentityKind approx(int digits) { return {false, digits}; }

  friend bool operator==(const IdentityKind&, const IdentityKind&) = default;
};

struct Identity {
  std::string id;
  IdentityKind kind;
  std::vector<Candidate> candidates;

  friend bool operator==(const Identity&, const Identity&) = default;
};

/// Throws InvalidArgument if the identity breaks a structural invariant
/// (no candidates, zero coefficient, empty series side, ...).
void validate(const Identity& identity);

/// Every identity and approximation in the catalog, in source order.
const std::vector<Identity>& builtin_registry();

/// nullptr when absent.
const Identity* find_identity(std::span<const Identity> registry, std::string_view id);

}  // namespace qseries
