#include "qseries_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "qseries/arith.hpp"
#include "qseries/catalog.hpp"
#include "qseries/closed_form.hpp"
#include "qseries/error.hpp"
#include "qseries/hunt.hpp"
#include "qseries/partition.hpp"
#include "qseries/pslq.hpp"
#include "qseries/series.hpp"
#include "qseries/verify.hpp"
#include "qseries_cli/json_io.hpp"

namespace qseries::cli {

using nlohmann::json;

namespace {

// Decimal of F at scale 10 as printed in the source table.
constexpr const char* kPrintedF10 = "1.000000000000002271101068";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int digits = 100;
  int guard = 0;  // 0 picks default_guard_digits
  bool json = false;
  unsigned threads = 1;
  std::string catalog;

  std::string ids = "all";

  std::string family;
  std::string spec;
  int s = 0;
  std::string alpha;
  int weight = 4;
  std::string convention = "pi";

  long farey = 0;
  double threshold = 12.0;

  long n = 0;
  std::string method = "oracle";

  std::string values;
  std::string relation_template;
  int max_coeff = 6;

  std::string output;
};

PrecisionContext context_for(const Options& o, int digits) {
  const int guard = o.guard > 0 ? o.guard : default_guard_digits(digits);
  if (guard < PrecisionContext::kMinGuardDigits) throw UsageError("--guard must be at least 10");
  return make_context(digits, guard);
}

json config_json(const Options& o, const CLI::App& sub) {
  json config{{"digits", o.digits}, {"guard", o.guard > 0 ? o.guard : default_guard_digits(o.digits)},
              {"output", o.json ? "json" : "text"}};
  if (!o.catalog.empty()) config["catalog"] = o.catalog;
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "--json") continue;
    const std::string name = opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front();
    if (name == "digits" || name == "guard" || name == "catalog") continue;
    config[name] = opt->as<std::string>();
  }
  return config;
}

void emit_json(std::ostream& out, const std::string& command, const json& config, const json& results) {
  out << json{{"schema_version", kSchemaVersion}, {"command", command}, {"config", config}, {"results", results}}
             .dump(2)
      << '\n';
}

std::vector<Identity> load_registry(const Options& o) {
  if (o.catalog.empty()) return builtin_registry();
  return load_catalog(o.catalog);
}

std::string short_value(const Real& x, int digits = 40) { return x.to_scientific(digits); }

std::string format_coefficients(const std::vector<BigInt>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += to_string(c[i]);
  }
  return out;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  if (o.digits < 30) throw UsageError("verify needs --digits >= 30");
  const std::vector<Identity> registry = load_registry(o);
  std::vector<std::string> ids;
  if (o.ids != "all") {
    for (const std::string& id : split_top_level(o.ids)) {
      if (!find_identity(registry, id)) throw UsageError("unknown identity id '" + id + "'");
      ids.push_back(id);
    }
  }
  const std::vector<BatchEntry> entries = verify_all(registry, ids, context_for(o, o.digits), o.threads);

  bool all_passed = true;
  json results = json::array();
  for (const BatchEntry& e : entries) {
    if (!e.report) {
      all_passed = false;
      err << "error: " << e.id << ": " << e.error << '\n';
      results.push_back(json{{"id", e.id}, {"error", e.error}});
      continue;
    }
    const VerificationReport& r = *e.report;
    all_passed = all_passed && r.passed;
    if (o.json) {
      results.push_back(r);
      continue;
    }
    std::ostringstream line;
    line << std::left << std::setw(6) << r.id << ' ' << std::setw(9) << to_string(r.status) << ' '
         << std::right << std::fixed << std::setprecision(2) << std::setw(8) << r.digits_agree << " digits";
    if (!r.kind.exact) line << " (expected " << r.kind.expected_digits << ")";
    line << "  " << std::setprecision(3) << r.wall_time << "s";
    if (r.flagged()) line << "  ! flagged: only the reconstructed form '" << r.candidate << "' holds";
    out << line.str() << '\n';
  }
  if (o.json) emit_json(out, "verify", config_json(o, sub), results);
  return all_passed ? kSuccess : kVerificationFailed;
}

// ---- eval -----------------------------------------------------------------

SeriesSpec spec_from_flags(const Options& o) {
  if (!o.spec.empty()) return parse_series_spec(o.spec);
  if (o.family.empty()) throw UsageError("eval needs --family or --spec");
  if (o.alpha.empty()) throw UsageError("eval needs --alpha P/Q");
  const Rational alpha = parse_rational(o.alpha);
  if (o.family == "lambert") return SeriesSpec::lambert(o.s, alpha);
  if (o.family == "cosh") return SeriesSpec::cosh(o.s, alpha);
  if (o.family == "sigma_exp") return SeriesSpec::sigma_exp(o.s, alpha);
  if (o.family == "euler_f" || o.family == "F") return SeriesSpec::euler_f(alpha);
  if (o.family == "rr_j" || o.family == "J") return SeriesSpec::rr_j(alpha);
  if (o.family == "eisenstein") {
    EisensteinConvention convention;
    if (o.convention == "pi") {
      convention = EisensteinConvention::pi_scale;
    } else if (o.convention == "two_pi") {
      convention = EisensteinConvention::two_pi_scale;
    } else {
      throw UsageError("--convention must be pi or two_pi");
    }
    return SeriesSpec::eisenstein(o.weight, alpha, convention);
  }
  throw UsageError("unknown family '" + o.family + "'");
}

int cmd_eval(const Options& o, const CLI::App& sub, std::ostream& out) {
  const SeriesSpec spec = spec_from_flags(o);
  const Real value = evaluate(spec, context_for(o, o.digits));
  if (o.json) {
    emit_json(out, "eval", config_json(o, sub),
              json::array({json{{"spec", to_string(spec)}, {"value", value}, {"text", value.to_fixed(o.digits)}}}));
  } else {
    out << to_string(spec) << " = " << value.to_fixed(o.digits) << '\n';
  }
  return kSuccess;
}

// ---- hunt -----------------------------------------------------------------

int cmd_hunt(const Options& o, const CLI::App& sub, std::ostream& out) {
  if (o.s != -3 && o.s != -7 && o.s != -11) throw UsageError("--s must be -3, -7 or -11");
  if (o.farey < 1) throw UsageError("--farey must be >= 1");
  if (o.threshold >= o.digits) throw UsageError("--threshold must be below --digits");
  const std::vector<NearHit> hits = hunt_near_integers(o.s, o.farey, o.threshold, context_for(o, o.digits), o.threads);
  if (o.json) {
    emit_json(out, "hunt", config_json(o, sub), hits);
    return kSuccess;
  }
  out << std::left << std::setw(10) << "f" << std::setw(10) << "alpha" << std::setw(24) << "nearest" << std::right
      << std::setw(10) << "digits" << "  value\n";
  for (const NearHit& h : hits) {
    out << std::left << std::setw(10) << to_string(h.farey_point) << std::setw(10) << to_string(h.alpha)
        << std::setw(24) << to_string(h.nearest) << std::right << std::fixed << std::setprecision(2)
        << std::setw(10) << h.nearness_digits << "  " << short_value(h.value, 30) << '\n';
  }
  return kSuccess;
}

// ---- partition ------------------------------------------------------------

int cmd_partition(Options o, const CLI::App& sub, std::ostream& out) {
  if (o.n < 0) throw UsageError("--n must be non-negative");
  const bool digits_given = sub.get_option("--digits")->count() > 0;
  json results = json::array();
  std::vector<std::string> lines;

  if (o.method == "estimate") {
    if (o.n < 2) throw UsageError("the estimate needs --n >= 2");
    const Real estimate = hr_estimate(o.n, context_for(o, o.digits));
    const BigInt exact = partition_oracle(o.n).back();
    const double ratio = (estimate / Real(exact, estimate.precision())).to_double();
    results.push_back(json{{"n", o.n}, {"estimate", estimate}, {"p", to_string(exact)}, {"ratio", round_to(ratio, 9)}});
    lines.push_back("estimate p(" + std::to_string(o.n) + ") ~ " + short_value(estimate, 20));
    std::ostringstream r;
    r << "exact    p(" << o.n << ") = " << to_string(exact) << "  ratio " << std::setprecision(9) << ratio;
    lines.push_back(r.str());
  } else if (o.method == "oracle" || o.method == "expansion") {
    std::vector<BigInt> values;
    if (o.method == "oracle") {
      values = partition_oracle(o.n);
    } else {
      if (o.n < 1 || o.n > static_cast<long>(kMaxExpansionCount)) throw UsageError("expansion needs 1 <= --n <= 205");
      if (!digits_given) o.digits = 2850;
      if (o.digits < 2850) throw UsageError("expansion needs --digits >= 2850");
      const PrecisionContext ctx = context_for(o, o.digits);
      values = partitions_by_expansion(static_cast<std::size_t>(o.n), ctx);
      const Real f10 = euler_F(Rational(10), make_context(60));
      const Real printed = Real::parse(kPrintedF10, f10.precision());
      const double agree = digits_of_agreement(f10, printed, Real(1, f10.precision()), 60);
      std::ostringstream c;
      c << "# checksum F(10) = " << f10.to_fixed(30) << " vs printed " << kPrintedF10 << ": " << std::fixed
        << std::setprecision(1) << agree << " digits";
      if (agree < 25) c << " (mismatch)";
      lines.push_back(c.str());
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
      results.push_back(PartitionRow{static_cast<long>(k), values[k]});
      lines.push_back(std::to_string(k) + " " + to_string(values[k]));
    }
  } else {
    throw UsageError("--method must be expansion, oracle or estimate");
  }

  if (o.json) {
    json config = config_json(o, sub);
    config["digits"] = o.digits;
    emit_json(out, "partition", config, results);
  } else {
    for (const std::string& line : lines) out << line << '\n';
  }
  return kSuccess;
}

// ---- relation -------------------------------------------------------------

Real parse_value(const std::string& text, const PrecisionContext& ctx) {
  try {
    return evaluate(parse_series_spec(text), ctx);
  } catch (const InvalidArgument&) {
  }
  return ClosedForm::parse(text).evaluate(ctx);
}

int cmd_relation(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  const bool has_values = !o.values.empty();
  const bool has_template = !o.relation_template.empty();
  if (has_values == has_template) throw UsageError("give exactly one of --values or --template");
  const PrecisionContext ctx = context_for(o, o.digits);

  if (has_template) {
    const std::vector<Identity> registry = load_registry(o);
    const Identity* identity = find_identity(registry, o.relation_template);
    if (!identity) throw UsageError("unknown identity id '" + o.relation_template + "'");
    if (!identity->kind.exact || identity->candidates.front().combination != Combination::linear) {
      throw UsageError("template " + identity->id + " is not an exact linear identity");
    }
    const Rediscovery found = rediscover(registry, o.relation_template, ctx);
    if (!found.matches) {
      err << "warning: " << found.id << ": recovered " << format_coefficients(found.oriented) << " but registry has "
          << format_coefficients(found.expected) << '\n';
    }
    if (o.json) {
      json r = found.relation;
      json oriented = json::array();
      for (const BigInt& c : found.oriented) oriented.push_back(to_string(c));
      r["id"] = found.id;
      r["candidate"] = found.candidate;
      r["oriented"] = oriented;
      r["matches_registry"] = found.matches;
      emit_json(out, "relation", config_json(o, sub), json::array({r}));
    } else {
      out << format_coefficients(found.oriented) << '\n';
    }
    return found.matches ? kSuccess : kVerificationFailed;
  }

  RelationProblem problem;
  problem.ctx = ctx;
  problem.max_coeff_digits = o.max_coeff;
  const std::vector<std::string> texts = split_top_level(o.values);
  if (texts.size() < 2) throw UsageError("--values needs at least two entries");
  for (const std::string& t : texts) problem.values.push_back(parse_value(t, ctx));

  const RelationResult result = pslq(problem);
  if (o.json) {
    std::visit([&](const auto& r) { emit_json(out, "relation", config_json(o, sub), json::array({r})); },
               result);
  } else if (const auto* rel = std::get_if<Relation>(&result)) {
    out << format_coefficients(rel->coefficients) << '\n';
  } else {
    out << "NO-RELATION (norm bound " << std::get<NoRelation>(result).bound.to_scientific(6) << ")\n";
  }
  return kSuccess;
}

// ---- catalog --------------------------------------------------------------

int cmd_catalog(const Options& o, std::ostream& out) {
  const std::vector<Identity> registry = load_registry(o);
  if (o.output.empty()) {
    write_catalog(out, registry);
    return kSuccess;
  }
  std::ofstream file(o.output);
  if (!file) throw UsageError("cannot write " + o.output);
  write_catalog(file, registry);
  return kSuccess;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--digits", o.digits, "Target decimal digits")->check(CLI::PositiveNumber);
  sub->add_option("--guard", o.guard, "Guard digits (default 20, or 50 above 500 digits)");
  sub->add_flag("--json", o.json, "Emit JSON");
  sub->add_option("--catalog", o.catalog, "Catalog file to use instead of the built-in registry");
  sub->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
}

}  // namespace

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  for (std::string& s : out) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  }
  std::erase_if(out, [](const std::string& s) { return s.empty(); });
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-series identity verification, near-integer hunting and partition extraction", "qseries"};
  app.require_subcommand(1);
  Options o;

  CLI::App* verify_cmd = app.add_subcommand("verify", "Verify registry identities");
  add_common(verify_cmd, o);
  verify_cmd->add_option("--id", o.ids, "Comma-separated ids, or all");

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one series");
  add_common(eval_cmd, o);
  eval_cmd->add_option("--family", o.family, "lambert, cosh, sigma_exp, euler_f, rr_j or eisenstein");
  eval_cmd->add_option("--spec", o.spec, "Series in text form, e.g. \"lambert(1, 1/5)\"");
  eval_cmd->add_option("--s", o.s, "Exponent s (summand n^-s)");
  eval_cmd->add_option("--alpha", o.alpha, "Scale P/Q (q for eisenstein)");
  eval_cmd->add_option("--weight", o.weight, "Eisenstein weight 4, 8 or 12");
  eval_cmd->add_option("--convention", o.convention, "Eisenstein convention pi or two_pi");

  CLI::App* hunt_cmd = app.add_subcommand("hunt", "Search Farey points for near integers");
  add_common(hunt_cmd, o);
  hunt_cmd->add_option("--s", o.s, "Exponent: -3, -7 or -11")->required();
  hunt_cmd->add_option("--farey", o.farey, "Farey order")->required();
  hunt_cmd->add_option("--threshold", o.threshold, "Minimum nearness in digits");

  CLI::App* partition_cmd = app.add_subcommand("partition", "Partition numbers p(0..n)");
  add_common(partition_cmd, o);
  partition_cmd->add_option("--n", o.n, "Largest n")->required();
  partition_cmd->add_option("--method", o.method, "expansion, oracle or estimate");

  CLI::App* relation_cmd = app.add_subcommand("relation", "Integer relation search");
  add_common(relation_cmd, o);
  relation_cmd->add_option("--values", o.values, "Comma-separated values (closed forms or series)");
  relation_cmd->add_option("--template", o.relation_template, "Registry id whose values to use");
  relation_cmd->add_option("--max-coeff", o.max_coeff, "Coefficient size bound in digits")->check(CLI::PositiveNumber);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "Print the identity catalog");
  add_common(catalog_cmd, o);
  catalog_cmd->add_option("--output", o.output, "Write to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(o, *verify_cmd, out, err);
    if (eval_cmd->parsed()) return cmd_eval(o, *eval_cmd, out);
    if (hunt_cmd->parsed()) return cmd_hunt(o, *hunt_cmd, out);
    if (partition_cmd->parsed()) return cmd_partition(o, *partition_cmd, out);
    if (relation_cmd->parsed()) return cmd_relation(o, *relation_cmd, out, err);
    if (catalog_cmd->parsed()) return cmd_catalog(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PrecisionTooLow& e) {
    err << "error: " << e.what() << '\n';
    return kPrecisionTooLow;
  }
  return kUsageError;
}

}  // namespace qseries::cli
