#include "qseries/rational.hpp"

#include <cctype>
#include <string>

#include "qseries/error.hpp"

namespace qseries {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw InvalidArgument("expected a rational of the form P/Q, got '" + std::string(text) + "'");
  }
  const auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  BigInt n(strip_plus(num));
  BigInt d(strip_plus(den));
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational out(n, d);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace qseries
