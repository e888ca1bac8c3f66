#include "qseries/catalog.hpp"

#include <fstream>
#include <sstream>

#include "qseries/error.hpp"

namespace qseries {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

std::string format_term(const Term& t, Combination combination) {
  std::string out;
  if (combination == Combination::linear || t.coefficient != 1) out = to_string(t.coefficient) + " * ";
  out += to_string(t.spec);
  if (combination == Combination::product) out += "^" + std::to_string(t.power);
  return out;
}

Term parse_term(const std::string& text, Combination combination) {
  Term t;
  std::string rest = text;
  if (const auto star = rest.find(" * "); star != std::string::npos) {
    t.coefficient = parse_rational(trim(rest.substr(0, star)));
    rest = trim(rest.substr(star + 3));
  } else if (combination == Combination::linear) {
    throw InvalidArgument("linear term needs a coefficient: " + text);
  }
  if (combination == Combination::product) {
    const auto caret = rest.rfind('^');
    if (caret == std::string::npos || caret < rest.rfind(')')) throw InvalidArgument("product factor needs a power: " + text);
    try {
      std::size_t used = 0;
      const std::string power = trim(rest.substr(caret + 1));
      t.power = std::stoi(power, &used);
      if (used != power.size()) throw InvalidArgument("bad power");
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad power in factor: " + text);
    }
    rest = trim(rest.substr(0, caret));
  }
  t.spec = parse_series_spec(rest);
  return t;
}

}  // namespace

void write_catalog(std::ostream& out, const std::vector<Identity>& identities) {
  for (const Identity& identity : identities) {
    const std::string kind =
        identity.kind.exact ? std::string("exact") : "approx " + std::to_string(identity.kind.expected_digits);
    for (const Candidate& c : identity.candidates) {
      out << identity.id << " | " << kind << " | " << c.label << " | " << (c.as_printed ? "printed" : "reconstructed")
          << " | " << c.lhs.to_string() << " | " << (c.combination == Combination::linear ? "linear" : "product")
          << " | ";
      for (std::size_t i = 0; i < c.terms.size(); ++i) {
        if (i) out << "; ";
        out << format_term(c.terms[i], c.combination);
      }
      out << '\n';
    }
  }
}

std::string serialize_catalog(const std::vector<Identity>& identities) {
  std::ostringstream out;
  write_catalog(out, identities);
  return out.str();
}

std::vector<Identity> parse_catalog(std::istream& in) {
  std::vector<Identity> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    try {
      const std::vector<std::string> fields = split(stripped, '|');
      if (fields.size() != 7) throw InvalidArgument("expected 7 fields, got " + std::to_string(fields.size()));

      IdentityKind kind;
      if (fields[1] == "exact") {
        kind = IdentityKind::make_exact();
      } else if (fields[1].rfind("approx ", 0) == 0) {
        kind = IdentityKind::approx(std::stoi(fields[1].substr(7)));
      } else {
        throw InvalidArgument("unknown kind '" + fields[1] + "'");
      }

      Candidate c;
      c.label = fields[2];
      if (fields[3] != "printed" && fields[3] != "reconstructed") throw InvalidArgument("bad provenance " + fields[3]);
      c.as_printed = fields[3] == "printed";
      c.lhs = ClosedForm::parse(fields[4]);
      if (fields[5] == "linear") {
        c.combination = Combination::linear;
      } else if (fields[5] == "product") {
        c.combination = Combination::product;
      } else {
        throw InvalidArgument("unknown combination '" + fields[5] + "'");
      }
      for (const std::string& term : split(fields[6], ';')) c.terms.push_back(parse_term(term, c.combination));

      if (out.empty() || out.back().id != fields[0]) {
        if (find_identity(out, fields[0])) throw InvalidArgument("identity " + fields[0] + " is not contiguous");
        out.push_back({fields[0], kind, {}});
      } else if (!(out.back().kind == kind)) {
        throw InvalidArgument("candidates of " + fields[0] + " disagree on kind");
      }
      out.back().candidates.push_back(std::move(c));
    } catch (const std::exception& e) {
      throw InvalidArgument("catalog line " + std::to_string(number) + ": " + e.what());
    }
  }
  for (const Identity& identity : out) validate(identity);
  return out;
}

std::vector<Identity> parse_catalog(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

std::vector<Identity> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open catalog " + path);
  return parse_catalog(in);
}

}  // namespace qseries
