#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "qseries/constants.hpp"
#include "qseries/precision.hpp"
#include "qseries/rational.hpp"
#include "qseries/real.hpp"

namespace qseries {

/// Immutable expression tree over rational literals and named constants,
/// closed under + - * /, rational powers, ln, exp and sqrt.
///
/// Text form (also accepted by parse):
///   7 * pi^3 / 180,  2^(7/8) * gamma_three_quarter / (pi^(1/4) * exp(pi / 6))
/// Integer-literal quotients fold into a single rational literal.
class ClosedForm {
 public:
  enum class Op { literal, constant, add, sub, mul, div, neg, pow, ln, exp, sqrt };

  ClosedForm();  // literal 0
  static ClosedForm literal(Rational value);
  static ClosedForm constant(NamedConstant c);

  friend ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator/(const ClosedForm& a, const ClosedForm& b);
  ClosedForm operator-() const;
  friend ClosedForm pow(const ClosedForm& base, const Rational& exponent);
  friend ClosedForm ln(const ClosedForm& x);
  friend ClosedForm exp(const ClosedForm& x);
  friend ClosedForm sqrt(const ClosedForm& x);

  Op op() const;
  bool is_literal() const { return op() == Op::literal; }
  /// Literal value; only meaningful when is_literal().
  const Rational& literal_value() const;

  Real evaluate(const PrecisionContext& ctx) const;
  std::string to_string() const;
  static ClosedForm parse(std::string_view text);

  friend bool operator==(const ClosedForm& a, const ClosedForm& b);

  struct Node;

 private:
  friend struct ClosedFormAccess;
  explicit ClosedForm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace qseries
