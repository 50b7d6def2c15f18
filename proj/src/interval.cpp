#include "wcert/interval.hpp"

#include <algorithm>
#include <cmath>

namespace wcert {

namespace {

constexpr double kRelSlack = 4.0 * std::numeric_limits<double>::epsilon();
constexpr double kAbsFloor = 1e-300;
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;
constexpr double kTwoPi = 6.28318530717958647692;
// exp(x) overflows a double just above this
constexpr double kExpMax = 709.0;

double pad_down(double x) { return x - (kRelSlack * std::abs(x) + kAbsFloor); }
double pad_up(double x) { return x + (kRelSlack * std::abs(x) + kAbsFloor); }

[[noreturn]] void overflow(const char* op, double lo, double hi) {
  throw DomainError(op, lo, hi, std::string(op) + ": result is not finite");
}

// Is there an integer k with phase + k*period inside [lo-slop, hi+slop]?
// Used to decide whether a trig extremum lies in the input range; the slop
// makes the test conservative (including an extremum only widens the result).
bool hits_lattice(double phase, double period, double lo, double hi) {
  double slop = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  double k = std::floor((lo - slop - phase) / period) + 1.0;
  return phase + k * period <= hi + slop;
}

}  // namespace

Interval Interval::around(double v) {
  double s = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(v));
  return Interval(v - s, v + s);
}

Interval widen_outward(double raw_lo, double raw_hi, const char* op) {
  double lo = pad_down(raw_lo);
  double hi = pad_up(raw_hi);
  if (!std::isfinite(lo) || !std::isfinite(hi)) overflow(op, raw_lo, raw_hi);
  return Interval(lo, hi);
}

Interval operator+(const Interval& a, const Interval& b) {
  return widen_outward(a.lo + b.lo, a.hi + b.hi, "add");
}

Interval operator-(const Interval& a, const Interval& b) {
  return widen_outward(a.lo - b.hi, a.hi - b.lo, "sub");
}

Interval operator-(const Interval& a) {
  // exact: negation commits no rounding
  return Interval(-a.hi, -a.lo);
}

Interval operator*(const Interval& a, const Interval& b) {
  double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return widen_outward(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}), "mul");
}

Interval operator*(double c, const Interval& a) { return Interval(c) * a; }
Interval operator+(double c, const Interval& a) { return Interval(c) + a; }
Interval operator-(double c, const Interval& a) { return Interval(c) - a; }

double op_div(double a, double b) {
  if (b == 0.0) throw DomainError("div", b, "division by zero");
  return a / b;
}

Interval op_div(const Interval& a, const Interval& b) { return a * op_recip(b); }

double op_recip(double a) {
  if (a == 0.0) throw DomainError("div", a, "division by zero");
  return 1.0 / a;
}

Interval op_recip(const Interval& a) {
  if (a.lo <= 0.0 && a.hi >= 0.0)
    throw DomainError("div", a.lo, a.hi, "division by an interval containing zero");
  return widen_outward(1.0 / a.hi, 1.0 / a.lo, "div");
}

double op_sqr(double a) { return a * a; }

Interval op_sqr(const Interval& a) {
  double m = a.mag();
  double lo = a.contains(0.0) ? 0.0 : std::min(a.lo * a.lo, a.hi * a.hi);
  return widen_outward(lo, m * m, "sqr");
}

double op_sqrt(double a) {
  if (a < 0.0) throw DomainError("sqrt", a, "sqrt of a negative argument");
  return std::sqrt(a);
}

Interval op_sqrt(const Interval& a) {
  if (a.lo < 0.0) throw DomainError("sqrt", a.lo, a.hi, "sqrt of a negative argument");
  Interval r = widen_outward(std::sqrt(a.lo), std::sqrt(a.hi), "sqrt");
  return Interval(std::max(0.0, r.lo), r.hi);
}

double op_exp(double a) {
  if (a > kExpMax) throw DomainError("exp", a, "exp overflow");
  return std::exp(a);
}

Interval op_exp(const Interval& a) {
  if (a.hi > kExpMax) throw DomainError("exp", a.lo, a.hi, "exp overflow");
  Interval r = widen_outward(std::exp(a.lo), std::exp(a.hi), "exp");
  return Interval(std::max(0.0, r.lo), r.hi);
}

double op_log(double a) {
  if (!(a > 0.0)) throw DomainError("ln", a, "ln requires a positive argument");
  return std::log(a);
}

Interval op_log(const Interval& a) {
  if (!(a.lo > 0.0)) throw DomainError("ln", a.lo, a.hi, "ln requires a positive argument");
  return widen_outward(std::log(a.lo), std::log(a.hi), "ln");
}

double op_log2(double a) {
  if (!(a > 0.0)) throw DomainError("log2", a, "log2 requires a positive argument");
  return std::log2(a);
}

Interval op_log2(const Interval& a) {
  if (!(a.lo > 0.0)) throw DomainError("log2", a.lo, a.hi, "log2 requires a positive argument");
  return widen_outward(std::log2(a.lo), std::log2(a.hi), "log2");
}

double op_sin(double a) { return std::sin(a); }

Interval op_sin(const Interval& a) {
  if (a.width() >= kTwoPi) return Interval(-1.0, 1.0);
  double s1 = std::sin(a.lo), s2 = std::sin(a.hi);
  double lo = std::min(s1, s2), hi = std::max(s1, s2);
  bool has_max = hits_lattice(kHalfPi, kTwoPi, a.lo, a.hi);
  bool has_min = hits_lattice(-kHalfPi, kTwoPi, a.lo, a.hi);
  Interval r = widen_outward(lo, hi, "sin");
  return Interval(has_min ? -1.0 : std::max(r.lo, -1.0), has_max ? 1.0 : std::min(r.hi, 1.0));
}

double op_cos(double a) { return std::cos(a); }

Interval op_cos(const Interval& a) {
  if (a.width() >= kTwoPi) return Interval(-1.0, 1.0);
  double c1 = std::cos(a.lo), c2 = std::cos(a.hi);
  double lo = std::min(c1, c2), hi = std::max(c1, c2);
  bool has_max = hits_lattice(0.0, kTwoPi, a.lo, a.hi);
  bool has_min = hits_lattice(kPi, kTwoPi, a.lo, a.hi);
  Interval r = widen_outward(lo, hi, "cos");
  return Interval(has_min ? -1.0 : std::max(r.lo, -1.0), has_max ? 1.0 : std::min(r.hi, 1.0));
}

double op_tan(double a) {
  double c = std::cos(a);
  double t = std::tan(a);
  if (c == 0.0 || !std::isfinite(t)) throw DomainError("tan", a, "tan at a pole");
  return t;
}

Interval op_tan(const Interval& a) {
  if (hits_lattice(kHalfPi, kPi, a.lo, a.hi))
    throw DomainError("tan", a.lo, a.hi, "tan over an interval containing a pole");
  return widen_outward(std::tan(a.lo), std::tan(a.hi), "tan");
}

double op_atan(double a) { return std::atan(a); }

Interval op_atan(const Interval& a) {
  return widen_outward(std::atan(a.lo), std::atan(a.hi), "arctan");
}

double op_asin(double a) {
  if (a < -1.0 || a > 1.0) throw DomainError("arcsin", a, "arcsin requires an argument in [-1, 1]");
  return std::asin(a);
}

Interval op_asin(const Interval& a) {
  if (a.lo < -1.0 || a.hi > 1.0)
    throw DomainError("arcsin", a.lo, a.hi, "arcsin requires arguments in [-1, 1]");
  return widen_outward(std::asin(a.lo), std::asin(a.hi), "arcsin");
}

double op_pow_int(double a, long n) {
  if (n == 0) return 1.0;
  if (n < 0) return op_recip(op_pow_int(a, -n));
  double base = a, acc = 1.0;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1u) acc *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  if (!std::isfinite(acc)) throw DomainError("pow", a, "pow: result is not finite");
  return acc;
}

Interval op_pow_int(const Interval& a, long n) {
  if (n == 0) return Interval(1.0);
  if (n < 0) return op_recip(op_pow_int(a, -n));
  Interval base = a;
  Interval acc(1.0);
  bool acc_used = false;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1u) {
      acc = acc_used ? acc * base : base;
      acc_used = true;
    }
    k >>= 1u;
    if (k) base = op_sqr(base);
  }
  return acc;
}

double op_pow(double a, double b) {
  if (!(a > 0.0)) throw DomainError("pow", a, "pow with non-integer exponent requires a positive base");
  return op_exp(b * std::log(a));
}

Interval op_pow(const Interval& a, const Interval& b) {
  if (!(a.lo > 0.0))
    throw DomainError("pow", a.lo, a.hi, "pow with non-integer exponent requires a positive base");
  return op_exp(b * op_log(a));
}

std::pair<Interval, Interval> bisect(const Interval& x) {
  if (!(x.width() > 0.0))
    throw Error(ErrorCode::InvalidArgument, "bisect requires an interval of positive width");
  double m = x.mid();
  // Guard against midpoints that collapse onto an endpoint at the limits of
  // double resolution.
  if (!(x.lo < m && m < x.hi)) m = std::nextafter(x.lo, x.hi);
  return {Interval(x.lo, m), Interval(m, x.hi)};
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Interval meet(const Interval& a, const Interval& b) {
  double lo = std::max(a.lo, b.lo);
  double hi = std::min(a.hi, b.hi);
  if (lo > hi) return a;
  return Interval(lo, hi);
}

}  // namespace wcert
