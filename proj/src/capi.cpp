#include "wcert.h"

#include <cstring>
#include <string>

#include "wcert/json_report.hpp"

using nlohmann::json;

struct wcert_expr {
  wcert::Expression impl;
};

namespace {

thread_local std::string g_last_error;

wcert_status status_of(const wcert::Error& e) {
  switch (e.code()) {
    case wcert::ErrorCode::Syntax: return WCERT_ERR_SYNTAX;
    case wcert::ErrorCode::UnknownIdentifier: return WCERT_ERR_UNKNOWN_IDENTIFIER;
    case wcert::ErrorCode::Domain: return WCERT_ERR_DOMAIN;
    case wcert::ErrorCode::MixedDomain: return WCERT_ERR_MIXED_DOMAIN;
    case wcert::ErrorCode::NotMonotone: return WCERT_ERR_NOT_MONOTONE;
    case wcert::ErrorCode::OutOfRange: return WCERT_ERR_OUT_OF_RANGE;
    case wcert::ErrorCode::Convergence: return WCERT_ERR_CONVERGENCE;
    case wcert::ErrorCode::Precondition: return WCERT_ERR_PRECONDITION;
    case wcert::ErrorCode::UnknownName: return WCERT_ERR_UNKNOWN_NAME;
    case wcert::ErrorCode::InvalidArgument: return WCERT_ERR_INVALID_ARGUMENT;
    case wcert::ErrorCode::Internal: return WCERT_ERR_INTERNAL;
  }
  return WCERT_ERR_INTERNAL;
}

template <class Fn>
wcert_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return WCERT_OK;
  } catch (const wcert::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const json::exception& e) {
    g_last_error = std::string("invalid JSON configuration: ") + e.what();
    return WCERT_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WCERT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return WCERT_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json parse_config(const char* config_json) {
  if (!config_json || !*config_json) return json::object();
  return json::parse(config_json);
}

void require(bool cond, const char* what) {
  if (!cond) throw wcert::Error(wcert::ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* wcert_version(void) { return "1.0.0"; }

const char* wcert_last_error(void) { return g_last_error.c_str(); }

void wcert_string_free(char* s) { delete[] s; }

wcert_status wcert_parse(const char* text, wcert_expr** out_expr) {
  return guarded([&] {
    require(text != nullptr && out_expr != nullptr, "null argument");
    *out_expr = new wcert_expr{wcert::Expression::parse(text)};
  });
}

void wcert_expr_free(wcert_expr* expr) { delete expr; }

wcert_status wcert_expr_format(const wcert_expr* expr, char** out_text) {
  return guarded([&] {
    require(expr != nullptr && out_text != nullptr, "null argument");
    *out_text = copy_string(expr->impl.str());
  });
}

wcert_status wcert_eval(const wcert_expr* expr, double x, double* out_value) {
  return guarded([&] {
    require(expr != nullptr && out_value != nullptr, "null argument");
    *out_value = expr->impl.eval_point(x);
  });
}

wcert_status wcert_eval_jet(const wcert_expr* expr, double x, double* out_value, double* out_d1,
                            double* out_d2) {
  return guarded([&] {
    require(expr != nullptr && out_value != nullptr && out_d1 != nullptr && out_d2 != nullptr,
            "null argument");
    wcert::Jet2 j = expr->impl.eval_jet2(x);
    *out_value = j.v;
    *out_d1 = j.d1;
    *out_d2 = j.d2;
  });
}

wcert_status wcert_eval_range(const wcert_expr* expr, double lo, double hi, double* out_lo,
                              double* out_hi) {
  return guarded([&] {
    require(expr != nullptr && out_lo != nullptr && out_hi != nullptr, "null argument");
    wcert::Interval r = expr->impl.eval_interval(wcert::Interval(lo, hi));
    *out_lo = r.lo;
    *out_hi = r.hi;
  });
}

wcert_status wcert_classify(const wcert_expr* expr, const char* config_json, char** out_json) {
  return guarded([&] {
    require(expr != nullptr && out_json != nullptr, "null argument");
    json cfg_j = parse_config(config_json);
    wcert::ClassifyConfig cfg = wcert::config_from_json(cfg_j);
    wcert::DomainSpec domain = wcert::domain_from_json(cfg_j);
    wcert::ClassifyResult r = wcert::classify(expr->impl, domain, cfg);
    *out_json = copy_string(wcert::to_json(r).dump());
  });
}

wcert_status wcert_constants(char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    *out_json = copy_string(wcert::to_json(wcert::constants()).dump());
  });
}

wcert_status wcert_catalog_run(const char* filter_csv, const char* config_json, char** out_json,
                               int* out_mismatches) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    std::vector<std::string> filter;
    if (filter_csv && *filter_csv) {
      std::string s(filter_csv);
      std::size_t start = 0;
      while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        if (comma > start) filter.push_back(s.substr(start, comma - start));
        start = comma + 1;
      }
    }
    json cfg_j = parse_config(config_json);
    wcert::ClassifyConfig cfg = wcert::config_from_json(cfg_j);
    auto outcomes = wcert::run_catalog(filter, cfg);
    if (out_mismatches) *out_mismatches = static_cast<int>(wcert::count_mismatches(outcomes));
    *out_json = copy_string(wcert::catalog_to_json(outcomes).dump());
  });
}

wcert_status wcert_ineq_check(const char* name, const double* args, size_t nargs,
                              const wcert_expr* expr, const char* config_json, char** out_json) {
  return guarded([&] {
    require(name != nullptr && out_json != nullptr, "null argument");
    require(args != nullptr || nargs == 0, "null argument");
    std::span<const double> a(args, nargs);
    std::string n(name);
    json cfg_j = parse_config(config_json);
    wcert::IneqReport r;
    if (n == "classical") {
      r = wcert::check_classical(a);
    } else if (n == "product") {
      r = wcert::check_product_form(a);
    } else if (n == "logprod") {
      r = wcert::check_log_product(a);
    } else if (n == "sin") {
      require(nargs == 2, "sin expects two arguments: x y");
      r = wcert::check_sin_display(a[0], a[1]);
    } else if (n == "gamma") {
      require(nargs == 3, "gamma expects three arguments: a x y");
      r = wcert::check_gamma_ineq(a[0], a[1], a[2]);
    } else if (n == "gamma-uv") {
      require(nargs == 3, "gamma-uv expects three arguments: a u v");
      r = wcert::check_gamma_uv(a[0], a[1], a[2]);
    } else if (n == "sandwich") {
      require(nargs == 2, "sandwich expects two arguments: x y");
      require(expr != nullptr, "sandwich needs an expression handle");
      wcert::DomainSpec domain = wcert::domain_from_json(cfg_j);
      r = wcert::check_sandwich(expr->impl, domain, a[0], a[1]);
    } else {
      throw wcert::Error(wcert::ErrorCode::UnknownName, "unknown inequality name '" + n + "'");
    }
    *out_json = copy_string(wcert::to_json(r).dump());
  });
}

wcert_status wcert_ineq_fuzz(const char* name, const double* args, size_t nargs,
                             const wcert_expr* expr, const char* config_json, char** out_json) {
  return guarded([&] {
    require(name != nullptr && out_json != nullptr, "null argument");
    require(args != nullptr || nargs == 0, "null argument");
    std::string n(name);
    json cfg_j = parse_config(config_json);
    long trials = cfg_j.value("trials", 10000L);
    std::uint64_t seed = cfg_j.value("seed", wcert::kDefaultFuzzSeed);
    require(trials > 0, "trials must be positive");
    wcert::DomainSpec domain = wcert::domain_from_json(cfg_j);
    wcert::FuzzSummary s;
    if (n == "classical") {
      s = wcert::fuzz_classical(trials, seed);
    } else if (n == "product") {
      s = wcert::fuzz_product_form(trials, domain.kind, seed);
    } else if (n == "logprod") {
      s = wcert::fuzz_log_product(trials, domain.kind, seed);
    } else if (n == "gamma") {
      require(nargs == 1, "gamma fuzz expects one argument: a");
      s = wcert::fuzz_gamma_ineq(args[0], trials, seed);
    } else if (n == "gamma-uv") {
      require(nargs == 1, "gamma-uv fuzz expects one argument: a");
      s = wcert::fuzz_gamma_uv(args[0], trials, seed);
    } else if (n == "sandwich") {
      require(expr != nullptr, "sandwich needs an expression handle");
      s = wcert::fuzz_sandwich(expr->impl, domain, trials, seed);
    } else {
      throw wcert::Error(wcert::ErrorCode::UnknownName,
                         "unknown or non-fuzzable inequality name '" + n + "'");
    }
    *out_json = copy_string(wcert::to_json(s).dump());
  });
}

}  // extern "C"
