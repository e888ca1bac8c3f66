#include "qseries/closed_form.hpp"

#include <cstring>
#include <map>
#include <vector>

#include "qseries/error.hpp"

namespace qseries {

struct ClosedForm::Node {
  Op op = Op::literal;
  Rational value;  // literal value, or the exponent of a pow node
  NamedConstant constant = NamedConstant::pi;
  std::vector<ClosedForm> children;
};

struct ClosedFormAccess {
  static const ClosedForm::Node& node(const ClosedForm& f) { return *f.node_; }
};

namespace {

using Node = ClosedForm::Node;
using Op = ClosedForm::Op;

std::shared_ptr<const Node> make(Op op, std::vector<ClosedForm> children, Rational value = 0) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->value = std::move(value);
  n->children = std::move(children);
  return n;
}

const Node& node_of(const ClosedForm& f) { return ClosedFormAccess::node(f); }

bool is_integer_literal(const ClosedForm& f) { return f.is_literal() && f.literal_value().get_den() == 1; }

}  // namespace

ClosedForm::ClosedForm() : ClosedForm(make(Op::literal, {}, 0)) {}

ClosedForm ClosedForm::literal(Rational value) {
  value.canonicalize();
  return ClosedForm(make(Op::literal, {}, std::move(value)));
}

ClosedForm ClosedForm::constant(NamedConstant c) {
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->constant = c;
  return ClosedForm(std::move(n));
}

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b) { return ClosedForm(make(Op::add, {a, b})); }
ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) { return ClosedForm(make(Op::sub, {a, b})); }
ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) { return ClosedForm(make(Op::mul, {a, b})); }

ClosedForm operator/(const ClosedForm& a, const ClosedForm& b) {
  if (is_integer_literal(a) && is_integer_literal(b) && b.literal_value() != 0) {
    return ClosedForm::literal(a.literal_value() / b.literal_value());
  }
  return ClosedForm(make(Op::div, {a, b}));
}

ClosedForm ClosedForm::operator-() const {
  if (is_literal()) return literal(-literal_value());
  return ClosedForm(make(Op::neg, {*this}));
}

ClosedForm pow(const ClosedForm& base, const Rational& exponent) {
  Rational e = exponent;
  e.canonicalize();
  return ClosedForm(make(Op::pow, {base}, std::move(e)));
}
ClosedForm ln(const ClosedForm& x) { return ClosedForm(make(Op::ln, {x})); }
ClosedForm exp(const ClosedForm& x) { return ClosedForm(make(Op::exp, {x})); }
ClosedForm sqrt(const ClosedForm& x) { return ClosedForm(make(Op::sqrt, {x})); }

ClosedForm::Op ClosedForm::op() const { return node_->op; }
const Rational& ClosedForm::literal_value() const { return node_->value; }

bool operator==(const ClosedForm& a, const ClosedForm& b) {
  if (a.node_ == b.node_) return true;
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.op != y.op) return false;
  if (x.op == Op::literal) return x.value == y.value;
  if (x.op == Op::constant) return x.constant == y.constant;
  if (x.op == Op::pow && x.value != y.value) return false;
  return x.children == y.children;
}

// ---------------------------------------------------------------- evaluation

namespace {

class Evaluator {
 public:
  explicit Evaluator(const PrecisionContext& ctx)
      : constants_ctx_(ctx.decimal_digits() + 20, ctx.guard_digits()), bits_(ctx.bits() + 64) {}

  Real eval(const ClosedForm& f) {
    const Node& n = node_of(f);
    switch (n.op) {
      case Op::literal: return Real(n.value, bits_);
      case Op::constant: return constant_value(n.constant);
      case Op::add: return eval(n.children[0]) + eval(n.children[1]);
      case Op::sub: return eval(n.children[0]) - eval(n.children[1]);
      case Op::mul: return eval(n.children[0]) * eval(n.children[1]);
      case Op::div: return eval(n.children[0]) / eval(n.children[1]);
      case Op::neg: return -eval(n.children[0]);
      case Op::pow: return pow(eval(n.children[0]), n.value);
      case Op::ln: return log(eval(n.children[0]));
      case Op::exp: return exp(eval(n.children[0]));
      case Op::sqrt: return sqrt(eval(n.children[0]));
    }
    throw InvalidArgument("unknown closed-form node");
  }

 private:
  Real constant_value(NamedConstant c) {
    auto it = cache_.find(c);
    if (it == cache_.end()) it = cache_.emplace(c, constant(c, constants_ctx_)).first;
    return it->second;
  }

  PrecisionContext constants_ctx_;
  mpfr_prec_t bits_;
  std::map<NamedConstant, Real> cache_;
};

}  // namespace

Real ClosedForm::evaluate(const PrecisionContext& ctx) const {
  Evaluator evaluator(ctx);
  return evaluator.eval(*this);
}

// ------------------------------------------------------------------ printing

namespace {

// Binding strength; higher binds tighter.
int precedence(const ClosedForm& f) {
  const Node& n = node_of(f);
  switch (n.op) {
    case Op::add:
    case Op::sub: return 1;
    case Op::mul:
    case Op::div: return 2;
    case Op::neg: return 3;
    case Op::pow: return 4;
    case Op::literal:
      if (n.value.get_den() != 1) return 2;  // printed as p/q
      return n.value < 0 ? 3 : 5;
    default: return 5;
  }
}

std::string print(const ClosedForm& f);

std::string wrap(const ClosedForm& f, int min_prec) {
  std::string s = print(f);
  return precedence(f) >= min_prec ? s : "(" + s + ")";
}

std::string print(const ClosedForm& f) {
  const Node& n = node_of(f);
  switch (n.op) {
    case Op::literal: return to_string(n.value);
    case Op::constant: return std::string(constant_name(n.constant));
    case Op::add: return wrap(n.children[0], 1) + " + " + wrap(n.children[1], 2);
    case Op::sub: return wrap(n.children[0], 1) + " - " + wrap(n.children[1], 2);
    // A rational literal on either side of * or / must be parenthesised so it
    // re-parses as one literal.
    case Op::mul: return wrap(n.children[0], 2) + " * " + wrap(n.children[1], 3);
    case Op::div: return wrap(n.children[0], 2) + " / " + wrap(n.children[1], 3);
    case Op::neg: return "-" + wrap(n.children[0], 4);
    case Op::pow: {
      const std::string e = to_string(n.value);
      const bool simple = n.value.get_den() == 1 && n.value >= 0;
      return wrap(n.children[0], 5) + "^" + (simple ? e : "(" + e + ")");
    }
    case Op::ln: return "ln(" + print(n.children[0]) + ")";
    case Op::exp: return "exp(" + print(n.children[0]) + ")";
    case Op::sqrt: return "sqrt(" + print(n.children[0]) + ")";
  }
  return "?";
}

}  // namespace

std::string ClosedForm::to_string() const { return print(*this); }

// ------------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ClosedForm parse_all() {
    ClosedForm out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("closed form '" + std::string(text_) + "': " + what + " at offset " +
                          std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  ClosedForm expression() {
    ClosedForm lhs = term();
    while (true) {
      if (accept("+")) lhs = lhs + term();
      else if (accept("-")) lhs = lhs - term();
      else return lhs;
    }
  }

  ClosedForm term() {
    ClosedForm lhs = unary();
    while (true) {
      if (accept("*")) lhs = lhs * unary();
      else if (accept("/")) lhs = lhs / unary();
      else return lhs;
    }
  }

  ClosedForm unary() {
    if (accept("-")) return -unary();
    return power();
  }

  ClosedForm power() {
    ClosedForm base = primary();
    if (!accept("^")) return base;
    return pow(base, exponent());
  }

  Rational exponent() {
    if (accept("(")) {
      const bool negative = accept("-");
      BigInt num = integer();
      BigInt den = 1;
      if (accept("/")) den = integer();
      expect(")");
      if (den == 0) fail("zero denominator in exponent");
      Rational r(negative ? BigInt(-num) : num, den);
      r.canonicalize();
      return r;
    }
    const bool negative = accept("-");
    BigInt num = integer();
    return Rational(negative ? BigInt(-num) : num);
  }

  BigInt integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  ClosedForm number() {
    BigInt whole = integer();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string frac(text_.substr(start, pos_ - start));
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      BigInt digits = frac.empty() ? BigInt(0) : BigInt(frac);
      Rational value(whole * scale + digits, scale);
      value.canonicalize();
      return ClosedForm::literal(std::move(value));
    }
    return ClosedForm::literal(Rational(whole));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  ClosedForm primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("(")) {
      ClosedForm inner = expression();
      expect(")");
      return inner;
    }
    if (accept("\xCF\x80")) return ClosedForm::constant(NamedConstant::pi);  // π
    if (accept("\xE2\x88\x9A")) return sqrt(primary());                      // √
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character");
    const std::string name = identifier();
    if (name == "ln" || name == "log" || name == "exp" || name == "sqrt") {
      expect("(");
      ClosedForm arg = expression();
      expect(")");
      if (name == "exp") return exp(arg);
      if (name == "sqrt") return sqrt(arg);
      return ln(arg);
    }
    if (const auto k = constant_from_name(name)) return ClosedForm::constant(*k);
    fail("unknown name '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ClosedForm ClosedForm::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace qseries
