#include "cli.hpp"

#include <chrono>
#include <exception>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gf2bl/bracken_leander.hpp"
#include "gf2bl/errors.hpp"
#include "gf2bl/field.hpp"
#include "gf2bl/spectrum.hpp"
#include "gf2bl/verification.hpp"

namespace gf2bl::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kMaxClassifyK = 5;
constexpr unsigned kMaxBruteK = 4;
constexpr unsigned kMaxExhaustiveVerifyK = 4;
constexpr std::uint64_t kDefaultSamples = 1000;

// Usage errors detected after parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

FieldPtr make_field(const CliConfig& config) {
  if (config.k < 1 || 4 * config.k > kMaxDegree) {
    throw UsageError("-k must be in [1, 32]");
  }
  if (!config.modulus_override) return Field::create(4 * config.k);
  const Modulus modulus = Modulus::from_hex(*config.modulus_override);
  if (modulus.degree() != 4 * config.k) {
    throw UsageError("--modulus " + *config.modulus_override +
                     " does not have degree " + std::to_string(4 * config.k));
  }
  return Field::create(modulus);
}

Json bit_or_null(const std::optional<bool>& bit) {
  return bit ? Json(*bit ? 1 : 0) : Json(nullptr);
}

// Counts that do not fit in 64 bits are rendered as decimal strings.
Json count_json(Word value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(static_cast<std::uint64_t>(value));
  }
  return Json(decimal_string(value));
}

Json report_json(const SolutionReport& report, const BLContext& ctx,
                 bool with_solutions) {
  Json j;
  j["k"] = ctx.k();
  j["modulus"] = ctx.field().modulus().to_hex();
  j["b"] = encode_hex(report.b);
  j["e"] = encode_hex(report.e);
  j["branch"] = std::string(branch_name(report.branch));
  j["c"] = report.c ? Json(encode_hex(*report.c)) : Json(nullptr);
  j["omega"] = encode_hex(ctx.omega());
  Json predicates = Json::object();
  if (report.branch == Branch::kEEqualsOne) {
    predicates["trace_b_norm"] = bit_or_null(report.predicates.trace_b_norm);
  } else {
    predicates["c_trace_is_one"] = report.predicates.c_trace_is_one.value_or(false);
    predicates["t1"] = bit_or_null(report.predicates.t1);
    predicates["t2"] = bit_or_null(report.predicates.t2);
  }
  j["predicates"] = predicates;
  j["count"] = report.count;
  if (with_solutions) {
    Json xs = Json::array();
    for (const Element& x : report.solutions) xs.push_back(encode_hex(x));
    j["solutions"] = xs;
  }
  return j;
}

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& item : v) {
      if (!s.empty()) s += ' ';
      s += scalar_text(item);
    }
    return s;
  }
  return v.dump();
}

void write_text(const Json& j, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      write_text(value, out, prefix + key + ".");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      for (const auto& item : value) {
        const bool passed = item.value("passed", false);
        out << (passed ? "PASS " : "FAIL ") << item.value("name", "");
        const std::string detail = item.value("detail", "");
        if (!detail.empty()) out << ": " << detail;
        out << '\n';
      }
    } else {
      out << prefix << key << ": " << scalar_text(value) << '\n';
    }
  }
}

void emit(const Json& j, const CliConfig& config, std::ostream& out) {
  if (config.output_format == OutputFormat::kJson) {
    out << j.dump(2) << '\n';
  } else {
    write_text(j, out);
  }
}

int cmd_solve(const CliConfig& config, const std::string& b_hex, bool with_solutions,
              std::ostream& out) {
  const BLContext ctx = make_context(make_field(config));
  const Element b = decode_hex(b_hex, ctx.field());
  const SolutionReport report = with_solutions ? solve(b, ctx) : classify(b, ctx);
  for (const Element& x : report.solutions) {
    if (!(eval_f(x, ctx) == b)) {
      throw InternalError("solution " + encode_hex(x) + " does not map to " +
                          encode_hex(b));
    }
  }
  emit(report_json(report, ctx, with_solutions), config, out);
  return kExitOk;
}

int cmd_eval(const CliConfig& config, const std::string& x_hex, std::ostream& out) {
  const FieldPtr field = make_field(config);
  const Element x = decode_hex(x_hex, *field);
  Json j;
  j["k"] = config.k;
  j["modulus"] = field->modulus().to_hex();
  j["x"] = encode_hex(x);
  j["f"] = encode_hex(eval_f(x, config.k));
  emit(j, config, out);
  return kExitOk;
}

int cmd_spectrum(const CliConfig& config, const std::string& method, bool force,
                 std::ostream& out) {
  if (method == "classify" && config.k > kMaxClassifyK && !force) {
    throw UsageError("--method classify is limited to k <= 5 without --force");
  }
  if (method == "brute" && config.k > kMaxBruteK && !force) {
    throw UsageError("--method brute is limited to k <= 4 without --force");
  }
  if (method == "formula" && config.k > 30) {
    throw UsageError("--method formula is limited to k <= 30");
  }
  if (method != "formula" && 4 * config.k > kMaxEnumerationDegree) {
    throw UsageError("enumeration is limited to k <= " +
                     std::to_string(kMaxEnumerationDegree / 4));
  }
  const FieldPtr field = make_field(config);
  const auto start = std::chrono::steady_clock::now();
  Spectrum s;
  if (method == "formula") {
    s = spectrum_formula(config.k);
  } else {
    const BLContext ctx = make_context(field);
    s = method == "classify" ? spectrum_classify(ctx) : spectrum_brute(ctx);
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  Json j;
  j["k"] = config.k;
  j["method"] = method;
  j["modulus"] = field->modulus().to_hex();
  j["N0"] = count_json(s.n0);
  j["N2"] = count_json(s.n2);
  j["N4"] = count_json(s.n4);
  j["elapsed"] = elapsed.count();
  emit(j, config, out);
  return kExitOk;
}

int cmd_verify(const CliConfig& config, std::uint64_t samples, std::ostream& out) {
  const BLContext ctx = make_context(make_field(config));
  const std::uint64_t seed = config.seed.value_or(0);
  const bool exhaustive = config.k <= kMaxExhaustiveVerifyK;
  const auto checks = exhaustive ? verify_exhaustive(ctx, samples, seed)
                                 : verify_sampled(ctx, samples, seed);
  bool all = true;
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    all = all && c.passed;
    list.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  Json j;
  j["k"] = config.k;
  j["modulus"] = ctx.field().modulus().to_hex();
  j["mode"] = exhaustive ? "exhaustive" : "sampled";
  j["samples"] = samples;
  j["seed"] = seed;
  j["checks"] = list;
  j["passed"] = all;
  emit(j, config, out);
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve X^(q^2+q+1) + (X+1)^(q^2+q+1) = b over GF(2^(4k))", "gf2bl"};
  app.require_subcommand(1);

  CliConfig config;
  std::string format = "json";
  std::string value_hex;
  std::string method = "formula";
  bool force = false;
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-k", config.k, "Field parameter: GF(2^(4k)), q = 2^k")
        ->required()
        ->check(CLI::Range(1u, 32u));
    sub->add_option("--modulus", config.modulus_override,
                    "Irreducible modulus of degree 4k as hex");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve f(X) = b explicitly");
  add_common(solve_cmd);
  solve_cmd->add_option("-b", value_hex, "Right-hand side b as hex")->required();

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Number of solutions of f(X) = b");
  add_common(classify_cmd);
  classify_cmd->add_option("-b", value_hex, "Right-hand side b as hex")->required();

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate f(x)");
  add_common(eval_cmd);
  eval_cmd->add_option("-x", value_hex, "Argument x as hex")->required();

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "Differential spectrum (N0, N2, N4)");
  add_common(spectrum_cmd);
  spectrum_cmd->add_option("--method", method, "formula, classify or brute")
      ->check(CLI::IsMember({"formula", "classify", "brute"}));
  spectrum_cmd->add_flag("--force", force, "Allow enumeration beyond default limits");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Cross-check the solver for one k");
  add_common(verify_cmd);
  verify_cmd->add_option("--samples", samples, "Random samples")
      ->check(CLI::PositiveNumber);
  CLI::Option* seed_opt = verify_cmd->add_option("--seed", seed, "RNG seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.output_format = format == "text" ? OutputFormat::kText : OutputFormat::kJson;
  if (seed_opt->count() > 0) config.seed = seed;

  try {
    if (solve_cmd->parsed()) return cmd_solve(config, value_hex, true, out);
    if (classify_cmd->parsed()) return cmd_solve(config, value_hex, false, out);
    if (eval_cmd->parsed()) return cmd_eval(config, value_hex, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(config, method, force, out);
    if (verify_cmd->parsed()) return cmd_verify(config, samples, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace gf2bl::cli
