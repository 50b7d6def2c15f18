#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wcert/criteria.hpp"

namespace wcert {

/// Point check of one concrete inequality.  Oriented so that the inequality
/// is lhs <= rhs, slack = rhs - lhs, and holds iff slack >= -1e-12 (slacks in
/// [-1e-12, 0) are counted as holding within rounding tolerance).
struct IneqReport {
  std::string name;
  std::vector<double> inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  std::vector<std::string> notes;
};

inline constexpr double kIneqHoldTolerance = 1e-12;

/// prod (1 - a_i) >= 1 - sum a_i for a_i in (0,1), n >= 2.
IneqReport check_classical(std::span<const double> a);

/// prod x_i >= sum x_i - (n-1) with all x_i in (0,1] or all in [1,inf);
/// tuples straddling 1 are rejected with MixedDomain.
IneqReport check_product_form(std::span<const double> x);

/// prod (1 + x_i) <= 2^(n-1) (1 + prod x_i), same domain rule.  For n = 3 the
/// notes carry the expanded three-variable form as well.
IneqReport check_log_product(std::span<const double> x);

/// The expanded n = 3 form: x1(1+x2) + x2(1+x3) + x3(1+x1) <= 3(1 + x1 x2 x3).
IneqReport check_log_product_expanded3(double x1, double x2, double x3);

/// Numeric inverse of a strictly monotone f over the truncated domain, by
/// bisection to 1e-12; validates the residual |f(result) - y| <= 1e-10.
double invert_numeric(const Expression& f, const DomainSpec& J, double y);

/// x + y - 1 <= f(Psi(x) Psi(y)) <= x y, Psi the numeric inverse of f.
/// slack is the binding side; both slacks and the middle term go in notes.
IneqReport check_sandwich(const Expression& f, const DomainSpec& J, double x, double y);

/// The printed sine chain x + y - 1 <= sin((4/pi) arcsin(x) arcsin(y)) <= xy,
/// evaluated literally (it fails at x = y = 1; the report says so).
IneqReport check_sin_display(double x, double y);

/// gamma(a x y) >= gamma(a x) + gamma(a y) - gamma(a), for 0 < a <= x1 and
/// x, y in (0,1].
IneqReport check_gamma_ineq(double a, double x, double y);

/// Substituted u = ax, v = ay variant: gamma(u v / a) >= gamma(u) + gamma(v)
/// - gamma(a), for 0 < a < x1 and u, v in (0, a].
IneqReport check_gamma_uv(double a, double u, double v);

// ---------------------------------------------------------------------------
// Reproducible fuzz harnesses (fixed seeds by default)
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultFuzzSeed = 0x5eed0001u;

struct FuzzSummary {
  std::string name;
  long trials = 0;
  long violations = 0;
  double min_slack = 0.0;
  std::vector<double> worst_inputs;
  std::uint64_t seed = 0;
};

FuzzSummary fuzz_classical(long trials, std::uint64_t seed = kDefaultFuzzSeed);
FuzzSummary fuzz_product_form(long trials, DomainSpec::Kind kind,
                              std::uint64_t seed = kDefaultFuzzSeed);
FuzzSummary fuzz_log_product(long trials, DomainSpec::Kind kind,
                             std::uint64_t seed = kDefaultFuzzSeed);
FuzzSummary fuzz_sandwich(const Expression& f, const DomainSpec& J, long trials,
                          std::uint64_t seed = kDefaultFuzzSeed, double draw_lo = 1e-3);
FuzzSummary fuzz_gamma_ineq(double a, long trials, std::uint64_t seed = kDefaultFuzzSeed);
FuzzSummary fuzz_gamma_uv(double a, long trials, std::uint64_t seed = kDefaultFuzzSeed);

}  // namespace wcert
