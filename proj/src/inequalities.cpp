#include "wcert/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wcert/special.hpp"

namespace wcert {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool finish(IneqReport& r) {
  r.slack = r.rhs - r.lhs;
  r.holds = r.slack >= -kIneqHoldTolerance;
  if (r.holds && r.slack < 0.0) r.notes.push_back("holds within rounding tolerance");
  return r.holds;
}

enum class Side { Unit, Ray };

Side classify_side(std::span<const double> x, const char* what) {
  bool any_below = false, any_above = false;
  for (double v : x) {
    if (!(v > 0.0)) throw DomainError(what, v, std::string(what) + ": inputs must be positive");
    if (v < 1.0) any_below = true;
    if (v > 1.0) any_above = true;
  }
  if (any_below && any_above)
    throw Error(ErrorCode::MixedDomain,
                std::string(what) + ": inputs straddle 1; the inequality is stated per interval");
  return any_above ? Side::Ray : Side::Unit;
}

// uniform in (0, 1]: 53-bit mantissa, zero excluded
double unit_draw(std::mt19937_64& rng) {
  return 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double draw_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

struct FuzzAccumulator {
  FuzzSummary s;
  void note(double slack, std::span<const double> inputs) {
    ++s.trials;
    if (s.trials == 1 || slack < s.min_slack) {
      s.min_slack = slack;
      s.worst_inputs.assign(inputs.begin(), inputs.end());
    }
    if (slack < -kIneqHoldTolerance) ++s.violations;
  }
};

}  // namespace

IneqReport check_classical(std::span<const double> a) {
  if (a.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "classical form needs at least two inputs");
  IneqReport r;
  r.name = "classical";
  r.inputs.assign(a.begin(), a.end());
  double prod = 1.0, sum = 0.0;
  for (double v : a) {
    if (!(v > 0.0 && v < 1.0))
      throw DomainError("classical", v, "classical form requires inputs in (0, 1)");
    prod *= 1.0 - v;
    sum += v;
  }
  // prod(1 - a_i) >= 1 - sum a_i, oriented as lhs <= rhs
  r.lhs = 1.0 - sum;
  r.rhs = prod;
  finish(r);
  return r;
}

IneqReport check_product_form(std::span<const double> x) {
  if (x.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "product form needs at least two inputs");
  classify_side(x, "product");
  IneqReport r;
  r.name = "product";
  r.inputs.assign(x.begin(), x.end());
  double prod = 1.0, sum = 0.0;
  for (double v : x) {
    prod *= v;
    sum += v;
  }
  r.lhs = sum - (static_cast<double>(x.size()) - 1.0);
  r.rhs = prod;
  finish(r);
  return r;
}

IneqReport check_log_product(std::span<const double> x) {
  if (x.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "log product form needs at least two inputs");
  classify_side(x, "logprod");
  IneqReport r;
  r.name = "logprod";
  r.inputs.assign(x.begin(), x.end());
  double prod1 = 1.0, prod = 1.0;
  for (double v : x) {
    prod1 *= 1.0 + v;
    prod *= v;
  }
  r.lhs = prod1;
  r.rhs = std::ldexp(1.0 + prod, static_cast<int>(x.size()) - 1);
  finish(r);
  if (x.size() == 3) {
    IneqReport e = check_log_product_expanded3(x[0], x[1], x[2]);
    r.notes.push_back("expanded three-variable form slack = " + format_double(e.slack));
  }
  return r;
}

IneqReport check_log_product_expanded3(double x1, double x2, double x3) {
  const double v[3] = {x1, x2, x3};
  classify_side(std::span<const double>(v, 3), "logprod-n3");
  IneqReport r;
  r.name = "logprod-n3";
  r.inputs = {x1, x2, x3};
  r.lhs = x1 * (1.0 + x2) + x2 * (1.0 + x3) + x3 * (1.0 + x1);
  r.rhs = 3.0 * (1.0 + x1 * x2 * x3);
  finish(r);
  return r;
}

double invert_numeric(const Expression& f, const DomainSpec& J, double y) {
  Interval box = J.truncated();
  double lo = box.lo, hi = box.hi;
  double flo = f.eval_point(lo), fhi = f.eval_point(hi);

  // coarse monotonicity probe before trusting the bisection
  double prev = flo;
  bool increasing = fhi > flo;
  for (int i = 1; i <= 16; ++i) {
    double t = lo + (hi - lo) * i / 16.0;
    double ft = f.eval_point(t);
    if (increasing ? ft < prev : ft > prev)
      throw Error(ErrorCode::NotMonotone,
                  "function is not monotone over " + J.describe());
    prev = ft;
  }

  double ylo = std::min(flo, fhi), yhi = std::max(flo, fhi);
  if (y < ylo - 1e-12 || y > yhi + 1e-12)
    throw Error(ErrorCode::OutOfRange,
                "target " + format_double(y) + " outside the range [" + format_double(ylo) +
                    ", " + format_double(yhi) + "] over " + J.describe());
  y = std::clamp(y, ylo, yhi);

  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    double fm = f.eval_point(mid);
    if ((fm < y) == increasing)
      lo = mid;
    else
      hi = mid;
  }
  double root = 0.5 * (lo + hi);
  if (std::abs(f.eval_point(root) - y) > 1e-10)
    throw Error(ErrorCode::NotMonotone,
                "inverse residual exceeds 1e-10; f may not be strictly monotone");
  return root;
}

IneqReport check_sandwich(const Expression& f, const DomainSpec& J, double x, double y) {
  Interval box = J.truncated();
  if (!box.contains(x) || !box.contains(y))
    throw DomainError("sandwich", std::min(x, y), "inputs must lie in " + J.describe());
  double px = invert_numeric(f, J, x);
  double py = invert_numeric(f, J, y);
  double mid = f.eval_point(px * py);
  IneqReport r;
  r.name = "sandwich";
  r.inputs = {x, y};
  r.lhs = x + y - 1.0;
  r.rhs = x * y;
  double lower_slack = mid - r.lhs;
  double upper_slack = r.rhs - mid;
  // the binding side decides; both sides are recorded
  r.slack = std::min(lower_slack, upper_slack);
  r.holds = r.slack >= -kIneqHoldTolerance;
  r.notes.push_back("middle term f(psi(x)*psi(y)) = " + format_double(mid));
  r.notes.push_back("lower slack = " + format_double(lower_slack));
  r.notes.push_back("upper slack = " + format_double(upper_slack));
  return r;
}

IneqReport check_sin_display(double x, double y) {
  if (!(x > 0.0 && x <= 1.0 && y > 0.0 && y <= 1.0))
    throw DomainError("sin-display", x, "inputs must lie in (0, 1]");
  double mid = std::sin((4.0 / kPi) * std::asin(x) * std::asin(y));
  IneqReport r;
  r.name = "sin";
  r.inputs = {x, y};
  r.lhs = x + y - 1.0;
  r.rhs = x * y;
  double lower_slack = mid - r.lhs;
  double upper_slack = r.rhs - mid;
  r.slack = std::min(lower_slack, upper_slack);
  r.holds = r.slack >= -kIneqHoldTolerance;
  r.notes.push_back("printed chain evaluated literally; middle term = " + format_double(mid));
  r.notes.push_back("lower slack = " + format_double(lower_slack));
  r.notes.push_back("upper slack = " + format_double(upper_slack));
  if (!r.holds) r.notes.push_back("the printed chain fails; see the normalization erratum entry");
  return r;
}

IneqReport check_gamma_ineq(double a, double x, double y) {
  double x1 = constants().x1;
  if (!(a > 0.0 && a <= x1))
    throw DomainError("gamma-ineq", a,
                      "parameter must lie in (0, x1], x1 = " + format_double(x1));
  if (!(x > 0.0 && x <= 1.0 && y > 0.0 && y <= 1.0))
    throw DomainError("gamma-ineq", x, "arguments must lie in (0, 1]");
  IneqReport r;
  r.name = "gamma";
  r.inputs = {a, x, y};
  r.lhs = op_gamma(a * x) + op_gamma(a * y) - op_gamma(a);
  r.rhs = op_gamma(a * x * y);
  finish(r);
  return r;
}

IneqReport check_gamma_uv(double a, double u, double v) {
  double x1 = constants().x1;
  if (!(a > 0.0 && a < x1))
    throw DomainError("gamma-uv", a,
                      "parameter must lie in (0, x1), x1 = " + format_double(x1));
  if (!(u > 0.0 && u <= a && v > 0.0 && v <= a))
    throw DomainError("gamma-uv", u, "arguments must lie in (0, a]");
  IneqReport r;
  r.name = "gamma-uv";
  r.inputs = {a, u, v};
  r.lhs = op_gamma(u) + op_gamma(v) - op_gamma(a);
  r.rhs = op_gamma(u * v / a);
  finish(r);
  // the substitution u = ax, v = ay forces the first argument uv/a
  r.notes.push_back("first argument read as u*v/a (substituted form of the gamma inequality)");
  return r;
}

// ---------------------------------------------------------------------------
// Fuzz harnesses
// ---------------------------------------------------------------------------

FuzzSummary fuzz_classical(long trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FuzzAccumulator acc;
  acc.s.name = "classical";
  acc.s.seed = seed;
  std::vector<double> a;
  for (long t = 0; t < trials; ++t) {
    a.resize(2 + rng() % 7);
    for (double& v : a) v = std::min(1.0 - 1e-12, std::max(1e-12, unit_draw(rng)));
    IneqReport r = check_classical(a);
    acc.note(r.slack, a);
  }
  return acc.s;
}

FuzzSummary fuzz_product_form(long trials, DomainSpec::Kind kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FuzzAccumulator acc;
  acc.s.name = "product";
  acc.s.seed = seed;
  std::vector<double> x;
  for (long t = 0; t < trials; ++t) {
    x.resize(2 + rng() % 7);
    for (double& v : x)
      v = kind == DomainSpec::Kind::UnitInterval ? unit_draw(rng) : draw_in(rng, 1.0, 10.0);
    IneqReport r = check_product_form(x);
    acc.note(r.slack, x);
  }
  return acc.s;
}

FuzzSummary fuzz_log_product(long trials, DomainSpec::Kind kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FuzzAccumulator acc;
  acc.s.name = "logprod";
  acc.s.seed = seed;
  std::vector<double> x;
  for (long t = 0; t < trials; ++t) {
    x.resize(2 + rng() % 7);
    for (double& v : x)
      v = kind == DomainSpec::Kind::UnitInterval ? unit_draw(rng) : draw_in(rng, 1.0, 10.0);
    IneqReport r = check_log_product(x);
    acc.note(r.slack, x);
  }
  return acc.s;
}

FuzzSummary fuzz_sandwich(const Expression& f, const DomainSpec& J, long trials,
                          std::uint64_t seed, double draw_lo) {
  std::mt19937_64 rng(seed);
  FuzzAccumulator acc;
  acc.s.name = "sandwich";
  acc.s.seed = seed;
  Interval box = J.truncated();
  double lo = std::max(draw_lo, box.lo);
  for (long t = 0; t < trials; ++t) {
    double in[2] = {draw_in(rng, lo, box.hi), draw_in(rng, lo, box.hi)};
    IneqReport r = check_sandwich(f, J, in[0], in[1]);
    acc.note(r.slack, in);
  }
  return acc.s;
}

FuzzSummary fuzz_gamma_ineq(double a, long trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FuzzAccumulator acc;
  acc.s.name = "gamma";
  acc.s.seed = seed;
  for (long t = 0; t < trials; ++t) {
    double in[3] = {a, unit_draw(rng), unit_draw(rng)};
    IneqReport r = check_gamma_ineq(a, in[1], in[2]);
    acc.note(r.slack, in);
  }
  return acc.s;
}

FuzzSummary fuzz_gamma_uv(double a, long trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FuzzAccumulator acc;
  acc.s.name = "gamma-uv";
  acc.s.seed = seed;
  for (long t = 0; t < trials; ++t) {
    double in[3] = {a, a * unit_draw(rng), a * unit_draw(rng)};
    IneqReport r = check_gamma_uv(a, in[1], in[2]);
    acc.note(r.slack, in);
  }
  return acc.s;
}

}  // namespace wcert
