#include "qseries_cli/json_io.hpp"

#include <cmath>

#include "qseries/error.hpp"

namespace qseries {

using nlohmann::json;

namespace {

BigInt big_from(const json& j) { return BigInt(j.get<std::string>()); }

}  // namespace

void to_json(json& j, const Real& x) {
  const long bits = x.precision();
  const int digits = static_cast<int>(std::ceil(bits * std::log10(2.0))) + 2;
  j = json{{"decimal", x.to_scientific(digits)}, {"bits", bits}};
}

void from_json(const json& j, Real& x) {
  x = Real::parse(j.at("decimal").get<std::string>(), j.at("bits").get<long>());
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"id", r.id},
           {"kind", r.kind.exact ? "exact" : "approx"},
           {"candidate", r.candidate},
           {"as_printed", r.as_printed},
           {"status", std::string(to_string(r.status))},
           {"flagged", r.flagged()},
           {"lhs", r.lhs_value},
           {"rhs", r.rhs_value},
           {"digits_agree", cli::round_to(r.digits_agree, 4)},
           {"passed", r.passed},
           {"wall_time", cli::round_to(r.wall_time, 6)},
           {"context_digits", r.context_digits}};
  if (!r.kind.exact) j["expected_digits"] = r.kind.expected_digits;
}

void from_json(const json& j, VerificationReport& r) {
  j.at("id").get_to(r.id);
  r.kind = j.at("kind").get<std::string>() == "exact" ? IdentityKind::make_exact()
                                                        : IdentityKind::approx(j.at("expected_digits").get<int>());
  j.at("candidate").get_to(r.candidate);
  j.at("as_printed").get_to(r.as_printed);
  const std::string status = j.at("status").get<std::string>();
  if (status == "verified") {
    r.status = VerificationStatus::verified;
  } else if (status == "corrected") {
    r.status = VerificationStatus::corrected;
  } else if (status == "failed") {
    r.status = VerificationStatus::failed;
  } else {
    throw InvalidArgument("unknown status " + status);
  }
  j.at("lhs").get_to(r.lhs_value);
  j.at("rhs").get_to(r.rhs_value);
  j.at("digits_agree").get_to(r.digits_agree);
  j.at("passed").get_to(r.passed);
  j.at("wall_time").get_to(r.wall_time);
  j.at("context_digits").get_to(r.context_digits);
}

void to_json(json& j, const NearHit& h) {
  j = json{{"f", to_string(h.farey_point)},
           {"alpha", to_string(h.alpha)},
           {"s", h.s},
           {"value", h.value},
           {"nearest", to_string(h.nearest)},
           {"nearness_digits", cli::round_to(h.nearness_digits, 4)}};
}

void from_json(const json& j, NearHit& h) {
  h.farey_point = parse_rational(j.at("f").get<std::string>());
  h.alpha = parse_rational(j.at("alpha").get<std::string>());
  j.at("s").get_to(h.s);
  j.at("value").get_to(h.value);
  h.nearest = parse_rational(j.at("nearest").get<std::string>());
  j.at("nearness_digits").get_to(h.nearness_digits);
}

void to_json(json& j, const Relation& r) {
  json coefficients = json::array();
  for (const BigInt& c : r.coefficients) coefficients.push_back(to_string(c));
  j = json{{"relation", true}, {"coefficients", coefficients}, {"residual", r.residual}, {"iterations", r.iterations}};
}

void from_json(const json& j, Relation& r) {
  r.coefficients.clear();
  for (const json& c : j.at("coefficients")) r.coefficients.push_back(big_from(c));
  j.at("residual").get_to(r.residual);
  j.at("iterations").get_to(r.iterations);
}

void to_json(json& j, const NoRelation& r) {
  j = json{{"relation", false}, {"bound", r.bound}, {"iterations", r.iterations}};
}

void from_json(const json& j, NoRelation& r) {
  j.at("bound").get_to(r.bound);
  j.at("iterations").get_to(r.iterations);
}

namespace cli {

void to_json(json& j, const PartitionRow& row) { j = json{{"n", row.n}, {"p", to_string(row.value)}}; }

void from_json(const json& j, PartitionRow& row) {
  j.at("n").get_to(row.n);
  row.value = big_from(j.at("p"));
}

double round_to(double value, int places) {
  const double scale = std::pow(10.0, places);
  return std::round(value * scale) / scale;
}

}  // namespace cli

}  // namespace qseries
