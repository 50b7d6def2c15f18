// wcert command line front end.  Everything substantive happens behind the
// C API in wcert.h; this file parses flags, assembles the JSON envelope and
// renders text output.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wcert.h"

using nlohmann::json;

namespace {

// exit codes: 0 success, 1 catalog mismatch, 2 usage/parse/domain error,
// 3 internal numeric failure
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int exit_code_for(wcert_status st) {
  switch (st) {
    case WCERT_OK:
      return kExitOk;
    case WCERT_ERR_CONVERGENCE:
    case WCERT_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

struct StringHolder {
  char* s = nullptr;
  ~StringHolder() { wcert_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct ExprHolder {
  wcert_expr* e = nullptr;
  ~ExprHolder() { wcert_expr_free(e); }
};

struct CommonFlags {
  std::string domain = "unit";
  double delta = 1e-6;
  double cap = 10.0;
  int max_depth = 40;
  long max_boxes = 400000;
  double time_budget = 5.0;
  double cert_tol = 1e-9;
  double report_tol = 1e-9;
  int grid = 512;
  long trials = 10000;
  std::uint64_t seed = 0x5eed0001u;
  bool random_seed = false;
  std::string format = "text";

  void attach(CLI::App* cmd, bool with_fuzz) {
    cmd->add_option("--domain", domain, "Interval the claim is over: unit (0,1] or ray [1,inf)")
        ->check(CLI::IsMember({"unit", "ray"}));
    cmd->add_option("--delta", delta, "Left truncation of (0,1] (default 1e-6)");
    cmd->add_option("--cap", cap, "Right cap of [1,inf) (default 10)");
    cmd->add_option("--max-depth", max_depth, "Per-axis subdivision depth cap (default 40)");
    cmd->add_option("--max-boxes", max_boxes, "Subdivision work budget (default 400000)");
    cmd->add_option("--time-budget", time_budget, "Per-property time budget in seconds (default 5)");
    cmd->add_option("--cert-tol", cert_tol, "Weak-leaf acceptance tolerance (default 1e-9)");
    cmd->add_option("--report-tol", report_tol, "Refutation margin threshold (default 1e-9)");
    cmd->add_option("--grid", grid, "Counterexample search grid size (default 512)");
    if (with_fuzz) {
      cmd->add_option("--trials", trials, "Fuzz trials (default 10000)");
      cmd->add_option("--seed", seed, "Fuzz seed (default fixed for reproducibility)");
      cmd->add_flag("--random-seed", random_seed, "Draw the fuzz seed from the clock");
    }
    cmd->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  }

  json to_config() const {
    json j;
    j["domain_kind"] = domain;
    j["delta"] = delta;
    j["cap"] = cap;
    j["max_depth"] = max_depth;
    j["max_boxes"] = max_boxes;
    j["time_budget_s"] = time_budget;
    j["cert_tolerance"] = cert_tol;
    j["report_tolerance"] = report_tol;
    j["grid_n"] = grid;
    j["trials"] = trials;
    j["seed"] = seed;
    return j;
  }
};

std::string iso_timestamp() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void emit_json(const std::string& command, const json& config, const json& results) {
  json envelope;
  envelope["command"] = command;
  envelope["config"] = config;
  envelope["results"] = results;
  envelope["version"] = wcert_version();
  envelope["timestamp"] = iso_timestamp();
  std::cout << envelope.dump(2) << "\n";
}

int fail(wcert_status st) {
  std::cerr << "error: " << wcert_last_error() << "\n";
  return exit_code_for(st);
}

// ---------------------------------------------------------------------------
// text rendering
// ---------------------------------------------------------------------------

std::string interval_text(const json& j) {
  return "[" + j[0].dump() + ", " + j[1].dump() + "]";
}

void print_verdict(const json& v) {
  std::printf("  %-18s %s", v["property"].get<std::string>().c_str(),
              v["outcome"].get<std::string>().c_str());
  if (v.contains("certificate")) {
    const json& c = v["certificate"];
    std::printf("  (criterion: %s%s, depth %d, leaves %ld, tol %g)",
                c["criterion"].get<std::string>().c_str(),
                c["strict"].get<bool>() ? ", strict" : "", c["max_depth_used"].get<int>(),
                c["leaves"].get<long>(), c["tolerance"].get<double>());
  }
  if (v.contains("witness")) {
    const json& w = v["witness"];
    std::printf("  witness (x, y) = (%.17g, %.17g), lhs %.17g vs rhs %.17g, margin %.3g",
                w["x"].get<double>(), w["y"].get<double>(), w["lhs"].get<double>(),
                w["rhs"].get<double>(), w["margin"].get<double>());
  }
  if (v.contains("reason")) std::printf("  [%s]", v["reason"].get<std::string>().c_str());
  std::printf("\n");
}

void print_classify(const json& r) {
  std::printf("expression: %s\n", r["expression"].get<std::string>().c_str());
  std::printf("domain: %s box %s\n", r["domain"]["kind"].get<std::string>().c_str(),
              interval_text(r["domain"]["box"]).c_str());
  const json& n = r["normalization"];
  std::printf("normalization: f(1) = %.17g, positive on box: %s -> %s\n", n["f1"].get<double>(),
              n["positive_on_box"].get<bool>() ? "yes" : "no",
              n["ok"].get<bool>() ? "ok" : "FAILED");
  if (!n["ok"].get<bool>()) {
    std::printf("  not classified: the candidate must satisfy f(1) = 1 and f > 0\n");
    return;
  }
  for (const json& v : r["verdicts"]) print_verdict(v);
}

void print_ineq(const json& r) {
  std::printf("%s  inputs (", r["name"].get<std::string>().c_str());
  const auto& in = r["inputs"];
  for (std::size_t i = 0; i < in.size(); ++i)
    std::printf("%s%.17g", i ? ", " : "", in[i].get<double>());
  std::printf(")\n");
  std::printf("  lhs = %.17g\n  rhs = %.17g\n  slack = %.17g\n  holds: %s\n",
              r["lhs"].get<double>(), r["rhs"].get<double>(), r["slack"].get<double>(),
              r["holds"].get<bool>() ? "yes" : "NO");
  if (r.contains("notes"))
    for (const auto& note : r["notes"]) std::printf("  note: %s\n", note.get<std::string>().c_str());
}

void print_fuzz(const json& r) {
  std::printf("%s fuzz: %ld trials, %ld violations, min slack %.6g (seed %llu)\n",
              r["name"].get<std::string>().c_str(), r["trials"].get<long>(),
              r["violations"].get<long>(), r["min_slack"].get<double>(),
              static_cast<unsigned long long>(r["seed"].get<std::uint64_t>()));
  std::printf("  worst inputs:");
  for (const auto& v : r["worst_inputs"]) std::printf(" %.17g", v.get<double>());
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wcert - certify multiplicative-additive function inequalities"};
  app.require_subcommand(1);

  CommonFlags flags;

  // classify
  std::string classify_expr;
  CLI::App* c_classify =
      app.add_subcommand("classify", "Classify an expression over the chosen interval");
  c_classify->add_option("expression", classify_expr, "Function of x, e.g. \"log2(1+x)\"")
      ->required();
  flags.attach(c_classify, false);

  // constants
  CLI::App* c_constants =
      app.add_subcommand("constants", "Print the engine's computed numeric constants");
  c_constants->add_option("--format", flags.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // catalog
  std::string catalog_filter;
  CLI::App* c_catalog =
      app.add_subcommand("catalog", "Run the built-in regression catalog (exit 1 on mismatch)");
  c_catalog->add_option("--only", catalog_filter, "Comma-separated entry ids to run");
  flags.attach(c_catalog, false);

  // ineq
  std::string ineq_name;
  std::vector<double> ineq_args;
  std::string ineq_expr_text = "(4/pi)*arctan(x)";
  long fuzz_trials = 0;
  CLI::App* c_ineq = app.add_subcommand(
      "ineq", "Check one named inequality (classical | product | logprod | sandwich | sin | "
              "gamma | gamma-uv)");
  c_ineq->add_option("name", ineq_name, "Inequality name")->required();
  c_ineq->add_option("args", ineq_args, "Numeric arguments");
  c_ineq->add_option("--f", ineq_expr_text,
                     "Expression for the sandwich chain (default the normalized arctangent)");
  c_ineq->add_option("--fuzz", fuzz_trials,
                     "Run a reproducible fuzz batch of this size instead of a point check");
  flags.attach(c_ineq, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (flags.random_seed)
    flags.seed = static_cast<std::uint64_t>(
        std::chrono::steady_clock::now().time_since_epoch().count());

  json config = flags.to_config();
  std::string config_str = config.dump();

  if (c_classify->parsed()) {
    ExprHolder expr;
    wcert_status st = wcert_parse(classify_expr.c_str(), &expr.e);
    if (st != WCERT_OK) return fail(st);
    StringHolder out;
    st = wcert_classify(expr.e, config_str.c_str(), &out.s);
    if (st != WCERT_OK) return fail(st);
    json result = json::parse(out.str());
    if (flags.format == "json")
      emit_json("classify", config, json::array({result}));
    else
      print_classify(result);
    return kExitOk;
  }

  if (c_constants->parsed()) {
    StringHolder out;
    wcert_status st = wcert_constants(&out.s);
    if (st != WCERT_OK) return fail(st);
    json c = json::parse(out.str());
    if (flags.format == "json") {
      emit_json("constants", json::object(), json::array({c}));
    } else {
      std::printf("euler_gamma = %.17g  (|gamma + digamma(1)| < 1e-10 checked at startup)\n",
                  c["euler_gamma"].get<double>());
      std::printf("x_min       = %.17g  (digamma residual %.3g)\n", c["x_min"].get<double>(),
                  c["digamma_at_x_min"].get<double>());
      std::printf("x1          = %.17g  (x_min - 1)\n", c["x1"].get<double>());
      std::printf("xi          = %.17g  (series residual %.3g, %ld terms, tolerance %.3g)\n",
                  c["xi"].get<double>(), c["xi_series_residual"].get<double>(),
                  c["xi_series_terms"].get<long>(), c["xi_tolerance"].get<double>());
    }
    return kExitOk;
  }

  if (c_catalog->parsed()) {
    StringHolder out;
    int mismatches = 0;
    wcert_status st = wcert_catalog_run(catalog_filter.empty() ? nullptr : catalog_filter.c_str(),
                                        config_str.c_str(), &out.s, &mismatches);
    if (st != WCERT_OK) return fail(st);
    json result = json::parse(out.str());
    if (flags.format == "json") {
      emit_json("catalog", config, json::array({result}));
    } else {
      for (const json& entry : result["entries"]) {
        std::printf("%-16s %s\n", entry["id"].get<std::string>().c_str(),
                    entry["match"].get<bool>() ? "match" : "MISMATCH");
        for (const json& c : entry["cases"]) {
          std::printf("  case %-22s %s\n", c["label"].get<std::string>().c_str(),
                      c["match"].get<bool>() ? "ok" : "MISMATCH");
          if (c.contains("mismatches"))
            for (const auto& m : c["mismatches"])
              std::printf("    %s\n", m.get<std::string>().c_str());
          for (const json& v : c["result"]["verdicts"]) {
            std::printf("  ");
            print_verdict(v);
          }
        }
      }
      std::printf("entries with mismatches: %d\n", mismatches);
    }
    return mismatches == 0 ? kExitOk : kExitMismatch;
  }

  if (c_ineq->parsed()) {
    ExprHolder expr;
    if (ineq_name == "sandwich") {
      wcert_status st = wcert_parse(ineq_expr_text.c_str(), &expr.e);
      if (st != WCERT_OK) return fail(st);
    }
    config["trials"] = fuzz_trials > 0 ? fuzz_trials : flags.trials;
    config_str = config.dump();
    StringHolder out;
    wcert_status st;
    if (fuzz_trials > 0)
      st = wcert_ineq_fuzz(ineq_name.c_str(), ineq_args.data(), ineq_args.size(), expr.e,
                           config_str.c_str(), &out.s);
    else
      st = wcert_ineq_check(ineq_name.c_str(), ineq_args.data(), ineq_args.size(), expr.e,
                            config_str.c_str(), &out.s);
    if (st != WCERT_OK) return fail(st);
    json result = json::parse(out.str());
    if (flags.format == "json") {
      emit_json("ineq", config, json::array({result}));
    } else if (fuzz_trials > 0) {
      print_fuzz(result);
    } else {
      print_ineq(result);
    }
    return kExitOk;
  }

  return kExitUsage;
}
