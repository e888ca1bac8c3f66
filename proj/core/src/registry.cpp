#include "qseries/identity.hpp"

#include <string>

#include "qseries/error.hpp"

namespace qseries {

namespace {

Rational R(const char* text) { return parse_rational(text); }
ClosedForm cf(const char* text) { return ClosedForm::parse(text); }

SeriesSpec L(int s, const char* alpha) { return SeriesSpec::lambert(s, R(alpha)); }
SeriesSpec C(int s, const char* alpha) { return SeriesSpec::cosh(s, R(alpha)); }
SeriesSpec S(int s, const char* alpha) { return SeriesSpec::sigma_exp(s, R(alpha)); }
SeriesSpec F(const char* alpha) { return SeriesSpec::euler_f(R(alpha)); }
SeriesSpec J(const char* alpha) { return SeriesSpec::rr_j(R(alpha)); }
SeriesSpec E(int weight, const char* q, EisensteinConvention convention = EisensteinConvention::pi_scale) {
  return SeriesSpec::eisenstein(weight, R(q), convention);
}

Term lin(const char* coefficient, SeriesSpec spec) { return {R(coefficient), std::move(spec), 1}; }
Term fac(SeriesSpec spec, int power) { return {Rational(1), std::move(spec), power}; }

Candidate linear(const char* lhs, std::vector<Term> terms, std::string label = "as printed", bool printed = true) {
  return {std::move(label), printed, cf(lhs), Combination::linear, std::move(terms)};
}

Candidate product(const char* lhs, std::vector<Term> terms, std::string label = "as printed", bool printed = true) {
  return {std::move(label), printed, cf(lhs), Combination::product, std::move(terms)};
}

Identity exact(const char* id, std::vector<Candidate> candidates) {
  return {id, IdentityKind::make_exact(), std::move(candidates)};
}

Identity approx(const char* id, int digits, std::vector<Candidate> candidates) {
  return {id, IdentityKind::approx(digits), std::move(candidates)};
}

// Coefficient table. Each entry lists the printed reading first.
std::vector<Identity> build() {
  std::vector<Identity> r;

  r.push_back(exact("A.1", {linear("zeta3 - 7 * pi^3 / 180", {lin("-2", L(3, "2"))})}));

  r.push_back(exact("1.1", {linear("pi", {lin("72", L(1, "1")), lin("-96", L(1, "2")), lin("24", L(1, "4"))})}));
  r.push_back(exact("1.2", {linear("1 / pi", {lin("8", L(-1, "1")), lin("-40", L(-1, "2")), lin("32", L(-1, "4"))})}));
  r.push_back(
      exact("1.3", {linear("pi^3", {lin("720", L(3, "1")), lin("-900", L(3, "2")), lin("180", L(3, "4"))})}));
  r.push_back(exact("1.4", {linear("zeta3", {lin("28", L(3, "1")), lin("-37", L(3, "2")), lin("7", L(3, "4"))})}));
  r.push_back(exact("1.5", {
      linear("pi^5", {lin("7056", L(5, "1")), lin("-6993", L(5, "2")), lin("63", L(5, "4"))}),
      linear("pi^5", {lin("7056", L(5, "1")), lin("-6993", L(5, "2")), lin("-63", L(5, "4"))},
             "third coefficient -63", false),
  }));
  r.push_back(exact("1.6", {linear("zeta5", {lin("24", L(5, "1")), lin("-259/10", L(5, "2")),
                                             lin("-1/10", L(5, "4"))})}));
  r.push_back(exact("1.7", {linear("pi^7", {lin("907200/13", L(7, "1")), lin("-70875", L(7, "2")),
                                            lin("14175/13", L(7, "4"))})}));
  r.push_back(exact("1.8", {linear("zeta7", {lin("304/13", L(7, "1")), lin("-103/4", L(7, "2")),
                                             lin("19/52", L(7, "4"))})}));
  r.push_back(
      exact("1.9", {linear("catalan", {lin("11", C(2, "1")), lin("-71/2", C(2, "2")), lin("11", C(2, "4"))})}));
  r.push_back(
      exact("1.10", {linear("1 / pi^2", {lin("4", S(1, "1")), lin("-64", S(1, "2")), lin("64", S(1, "4"))})}));
  r.push_back(
      exact("1.11", {linear("1 / pi^2", {lin("2", C(-2, "1")), lin("-32", C(-2, "2")), lin("32", C(-2, "4"))})}));
  r.push_back(
      exact("1.12", {linear("1 / pi^3", {lin("4", S(2, "1")), lin("-128", S(2, "2")), lin("256", S(2, "4"))})}));

  r.push_back(approx("2.1", 15, {linear("10", {lin("1", L(-3, "2/7"))})}));
  r.push_back(approx("2.2", 31, {linear("119", {lin("1", L(-3, "2/13"))})}));

  const std::vector<Term> pi_tenth_terms{lin("-1", L(1, "1")),   lin("4", L(1, "2")),    lin("-1", L(1, "4")),
                                         lin("1", L(1, "1/5")), lin("-4", L(1, "2/5")), lin("1", L(1, "4/5"))};
  r.push_back(exact("2.3", {linear("pi / 10", pi_tenth_terms),
                            linear("-pi / 10", pi_tenth_terms, "left side negated", false)}));
  r.push_back(exact("2.4", {linear("7 * pi / 120", {lin("-2", L(1, "1")), lin("-1", L(1, "1/5")),
                                                    lin("4", L(1, "2/5")), lin("-1", L(1, "4/5"))})}));
  r.push_back(exact("2.5", {linear("3 * ln(phi)", {lin("-4", L(1, "1")), lin("10", L(1, "2")), lin("-4", L(1, "4")),
                                                   lin("4", L(1, "1/5")), lin("-10", L(1, "2/5")),
                                                   lin("4", L(1, "4/5"))})}));
  r.push_back(exact("2.6", {linear("pi / 40 - 3 * ln_pi / 2 + 2 * ln(gamma_quarter) - 7 * ln2 / 4",
                                   {lin("1", L(1, "1/5")), lin("-4", L(1, "2/5")), lin("1", L(1, "4/5"))})}));
  r.push_back(exact("2.7", {linear("ln(phi) - pi / 120 + ln2 / 4",
                                   {lin("1", L(1, "1/5")), lin("-2", L(1, "2/5")), lin("1", L(1, "4/5"))})}));
  r.push_back(exact("2.8", {product("1", {fac(F("1/5"), 5), fac(F("4/5"), 5), fac(F("2/5"), -20), fac(F("2"), -28),
                                          fac(F("1"), 31), fac(F("4"), 7)})}));

  r.push_back(exact("2.10", {product("e_pi", {fac(J("1/5"), 10), fac(J("4/5"), 10), fac(J("2/5"), -40)})}));
  r.push_back(exact("2.11", {
      product("e_pi^2 / phi^15", {fac(J("2/5"), 30)}),
      product("e_pi^(-2) / phi^15", {fac(J("2/5"), 30)}, "exponent of e^pi negated", false),
  }));
  r.push_back(exact("2.12", {
      product("e_pi / phi^6", {fac(J("1"), 6), fac(J("4"), 10), fac(J("2"), -12)}),
      product("phi^6 / e_pi", {fac(J("1"), 6), fac(J("4"), 6), fac(J("2"), -12)},
              "J(4) exponent 6, right side inverted", false),
  }));
  r.push_back(exact("2.13", {
      product("phi^3", {fac(J("1/5"), 4), fac(J("4/5"), 4), fac(J("2/5"), -10)}),
      product("phi^(-3)", {fac(J("1/5"), 4), fac(J("4/5"), 4), fac(J("2/5"), -10)}, "right side inverted", false),
  }));
  r.push_back(exact("2.14", {
      product("e_pi * phi^12", {fac(J("1/5"), 6), fac(J("4/5"), 6)}),
      product("1 / (e_pi * phi^12)", {fac(J("1/5"), 6), fac(J("4/5"), 6)}, "right side inverted", false),
  }));

  r.push_back(exact("2.15", {linear("-1/240 + (1/320) * (301 + 210 * sqrt2 * root4_7 + 120 * sqrt7 + "
                                    "90 * sqrt2 * root4_343) * pi^2 / gamma_three_quarter^8",
                                    {lin("1", L(-3, "2/7"))})}));
  r.push_back(exact("2.19", {linear("pi^2 / gamma_three_quarter^8 * (5313/4 + 630 * sqrt5 + "
                                    "90 * sqrt(360 + 161 * sqrt5))",
                                    {lin("1", E(4, "1/10"))})}));
  r.push_back(exact("2.20", {
      linear("pi^2 / gamma_three_quarter^8 * (483/4 + 90 * sqrt5)", {lin("1", E(4, "1/5"))},
             "missing operator read as +", false),
      linear("pi^2 / gamma_three_quarter^8 * (483/4 - 90 * sqrt5)", {lin("1", E(4, "1/5"))},
             "missing operator read as -", false),
  }));
  r.push_back(exact("2.21", {
      linear("pi^2 / gamma_three_quarter^8 * (5313 + 2520 * sqrt5 - 32 * sqrt(91125/2 + 326025 * sqrt5 / 16))",
             {lin("1", E(4, "2/5"))}),
      linear("pi^2 / gamma_three_quarter^8 * (5313 + 2520 * sqrt5 + 32 * sqrt(91125/2 + 326025 * sqrt5 / 16))",
             {lin("1", E(4, "2/5"))}, "inner sign +", false),
      linear("pi^2 / gamma_three_quarter^8 * (5313 + 2520 * sqrt5 - 32 * sqrt(91125/2 + 326025 * sqrt5 / 16)) / 64",
             {lin("1", E(4, "2/5"))}, "outer factor 1/64", false),
      linear("pi^2 / gamma_three_quarter^8 * (5313 + 2520 * sqrt5 + 32 * sqrt(91125/2 + 326025 * sqrt5 / 16)) / 64",
             {lin("1", E(4, "2/5"))}, "outer factor 1/64, inner sign +", false),
  }));

  r.push_back(exact("2.22", {
      linear("0", {lin("2", L(-3, "1/5")), lin("-28", L(-3, "2/5")), lin("32", L(-3, "4/5")), lin("28", L(-3, "2/5")),
                   lin("-257", L(-3, "1")), lin("251", L(-3, "2"))}),
      linear("0", {lin("2", L(-3, "1/5")), lin("-28", L(-3, "2/5")), lin("32", L(-3, "4/5")),
                   lin("-257", L(-3, "1")), lin("251", L(-3, "2"))},
             "duplicated 2/5 term removed", false),
  }));
  r.push_back(exact("2.23", {linear("0", {lin("8", L(-7, "1/5")), lin("-2192", L(-7, "2/5")),
                                          lin("2048", L(-7, "4/5")), lin("208897", L(-7, "1")),
                                          lin("-208761", L(-7, "2"))})}));

  // Literal reading of the Eisenstein note gives x = e^(-4 pi q); the
  // relations hold for x = e^(-2 pi q).
  const auto eisenstein_relation = [](const char* id, int w, const char* c1, const char* c2, const char* c3,
                                      const char* c4) {
    const auto terms = [&](EisensteinConvention conv) {
      return std::vector<Term>{lin(c1, E(w, "1/10", conv)), lin(c2, E(w, "1/5", conv)), lin(c3, E(w, "2/5", conv)),
                               lin(c4, E(w, "1/2", conv))};
    };
    return exact(id, {linear("0", terms(EisensteinConvention::two_pi_scale)),
                      linear("0", terms(EisensteinConvention::pi_scale), "x = e^(-2 pi q)", false)});
  };
  r.push_back(eisenstein_relation("2.24", 4, "-1", "14", "-16", "1288/11"));
  r.push_back(eisenstein_relation("2.25", 8, "1", "-274", "256", "3133472/121"));
  r.push_back(eisenstein_relation("2.26", 12, "-1", "4034", "-4096", "7811747968/2081"));

  r.push_back(approx("2.27", 4, {product("e_pi / 2^4", {fac(F("1"), 8)})}));
  r.push_back(approx("2.28", 6, {product("e_pi^5 / 2^16", {fac(F("1/2"), 16)})}));
  r.push_back(approx("2.29", 35, {product("e_pi", {fac(F("1/8"), 36), fac(F("1/15"), 18), fac(F("1/12"), -36),
                                                   fac(F("3/20"), -18)})}));
  r.push_back(approx("2.30", 36, {product("e_pi^85 / 2^128", {fac(F("1/8"), 64)})}));
  r.push_back(approx("2.31", 48, {product("e_pi", {fac(F("1/12"), 4), fac(F("1/36"), 2), fac(F("1/9"), -2),
                                                   fac(F("1/24"), -4)})}));
  r.push_back(approx("2.32", 173, {product("e_pi^1365 / 2^768", {fac(F("1/32"), 256)})}));

  r.push_back(exact("3.2", {
      product("gamma_three_quarter * sqrt(5 + 5 * sqrt5) / (pi^(1/4) * exp(pi / 6))", {fac(F("10"), 1)}),
      product("gamma_three_quarter * sqrt(5 + 5 * sqrt5) / (pi^(1/4) * exp(5 * pi / 12))", {fac(F("10"), 1)},
              "exponent 5 pi / 12", false),
  }));
  r.push_back(exact("3.F4", {
      product("7 / 2^8 * gamma_three_quarter", {fac(F("4"), 1)}),
      product("2^(7/8) * gamma_three_quarter / (pi^(1/4) * exp(pi / 6))", {fac(F("4"), 1)},
              "2^(7/8) with missing pi^(1/4) e^(pi/6)", false),
  }));

  for (const Identity& identity : r) validate(identity);
  return r;
}

}  // namespace

void validate(const Identity& identity) {
  const auto fail = [&](const std::string& what) {
    throw InvalidArgument("identity " + identity.id + ": " + what);
  };
  if (identity.id.empty()) throw InvalidArgument("identity with empty id");
  if (identity.candidates.empty()) fail("no candidates");
  if (!identity.kind.exact && identity.kind.expected_digits < 1) fail("approximate identity needs expected digits");
  for (const Candidate& c : identity.candidates) {
    if (c.terms.empty()) fail("candidate '" + c.label + "' has no series terms");
    if (c.label.find('|') != std::string::npos) fail("candidate label may not contain '|'");
    for (const Term& t : c.terms) {
      if (t.coefficient == 0) fail("zero coefficient on " + to_string(t.spec));
      if (c.combination == Combination::linear && t.power != 1) fail("linear terms must have power 1");
      if (c.combination == Combination::product && t.power == 0) fail("product factor with power 0");
    }
  }
}

const std::vector<Identity>& builtin_registry() {
  static const std::vector<Identity> registry = build();
  return registry;
}

const Identity* find_identity(std::span<const Identity> registry, std::string_view id) {
  for (const Identity& identity : registry) {
    if (identity.id == id) return &identity;
  }
  return nullptr;
}

}  // namespace qseries
