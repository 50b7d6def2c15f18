#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "wcert/errors.hpp"

namespace wcert {

/// Closed interval [lo, hi] with enclosure-safe arithmetic.
///
/// Directed rounding is not used; instead every primitive widens its raw
/// result outward by a relative slack of four machine epsilons per endpoint
/// plus an absolute floor of 1e-300.  The slack dominates the rounding error
/// of the IEEE operations and of the libm calls involved, so the returned
/// interval always encloses the exact image set.  Endpoints are always finite;
/// an operation that would overflow throws DomainError instead.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  explicit Interval(double v) : lo(v), hi(v) {}
  Interval(double l, double h) : lo(l), hi(h) {
    if (!(l <= h) || !std::isfinite(l) || !std::isfinite(h))
      throw Error(ErrorCode::InvalidArgument, "invalid interval endpoints");
  }

  /// Tiny symmetric enclosure of a value that is only approximately
  /// representable (named constants such as pi).
  static Interval around(double v);

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  double mag() const { return std::max(std::abs(lo), std::abs(hi)); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
};

/// Outward widening applied by every primitive.
Interval widen_outward(double raw_lo, double raw_hi, const char* op);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(double c, const Interval& a);
Interval operator+(double c, const Interval& a);
Interval operator-(double c, const Interval& a);

/// Checked division; the scalar overloads exist so that generic jet code can
/// use one spelling for double and Interval alike.
double op_div(double a, double b);
Interval op_div(const Interval& a, const Interval& b);
double op_recip(double a);
Interval op_recip(const Interval& a);

double op_sqr(double a);
Interval op_sqr(const Interval& a);
double op_sqrt(double a);
Interval op_sqrt(const Interval& a);

double op_exp(double a);
Interval op_exp(const Interval& a);
double op_log(double a);
Interval op_log(const Interval& a);
double op_log2(double a);
Interval op_log2(const Interval& a);
double op_sin(double a);
Interval op_sin(const Interval& a);
double op_cos(double a);
Interval op_cos(const Interval& a);
double op_tan(double a);
Interval op_tan(const Interval& a);
double op_atan(double a);
Interval op_atan(const Interval& a);
double op_asin(double a);
Interval op_asin(const Interval& a);

/// Integer power by binary exponentiation (squaring keeps even powers tight).
double op_pow_int(double a, long n);
Interval op_pow_int(const Interval& a, long n);

/// General power; requires a strictly positive base.
double op_pow(double a, double b);
Interval op_pow(const Interval& a, const Interval& b);

/// Midpoint bisection.  Requires positive width.
std::pair<Interval, Interval> bisect(const Interval& x);

Interval hull(const Interval& a, const Interval& b);

/// Intersection of two enclosures of the same set.  Both arguments must
/// contain the true range, so the result is never empty in exact arithmetic;
/// if rounding produces an empty crossing the first argument is returned.
Interval meet(const Interval& a, const Interval& b);

}  // namespace wcert
