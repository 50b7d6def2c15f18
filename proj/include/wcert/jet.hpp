#pragma once

#include "wcert/interval.hpp"
#include "wcert/special.hpp"

namespace wcert {

/// (value, first derivative, second derivative) propagated by exact
/// chain/product/quotient rules.  T is double for point evaluation and
/// Interval for enclosure evaluation; every rule below only uses operations
/// that are sound for both.
template <class T>
struct Jet {
  T v;
  T d1;
  T d2;

  Jet() : v(0.0), d1(0.0), d2(0.0) {}
  explicit Jet(double c) : v(c), d1(0.0), d2(0.0) {}
  Jet(T value, T first, T second) : v(value), d1(first), d2(second) {}

  /// Seed for the independent variable at x.
  static Jet variable(T x) { return Jet(x, T(1.0), T(0.0)); }
};

using Jet2 = Jet<double>;
using IntervalJet2 = Jet<Interval>;

template <class T>
Jet<T> operator+(const Jet<T>& a, const Jet<T>& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}

template <class T>
Jet<T> operator-(const Jet<T>& a, const Jet<T>& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}

template <class T>
Jet<T> operator-(const Jet<T>& a) {
  return {-a.v, -a.d1, -a.d2};
}

template <class T>
Jet<T> operator*(const Jet<T>& a, const Jet<T>& b) {
  return {a.v * b.v, a.v * b.d1 + a.d1 * b.v, a.v * b.d2 + 2.0 * (a.d1 * b.d1) + a.d2 * b.v};
}

template <class T>
Jet<T> op_div(const Jet<T>& a, const Jet<T>& b) {
  T q = op_div(a.v, b.v);
  T q1 = op_div(a.d1 - q * b.d1, b.v);
  T q2 = op_div(a.d2 - 2.0 * (q1 * b.d1) - q * b.d2, b.v);
  return {q, q1, q2};
}

template <class T>
Jet<T> op_sqr(const Jet<T>& a) {
  return {op_sqr(a.v), 2.0 * (a.v * a.d1), 2.0 * (op_sqr(a.d1) + a.v * a.d2)};
}

namespace detail {

/// f(u) with f0 = f(u.v), f1 enclosing f'(u.v), f2 enclosing f''(u.v).
template <class T>
Jet<T> chain(const Jet<T>& u, T f0, T f1, T f2) {
  return {f0, f1 * u.d1, f2 * op_sqr(u.d1) + f1 * u.d2};
}

inline constexpr double kLn2 = 0.69314718055994530942;

}  // namespace detail

template <class T>
Jet<T> op_exp(const Jet<T>& u) {
  T e = op_exp(u.v);
  return detail::chain(u, e, e, e);
}

template <class T>
Jet<T> op_log(const Jet<T>& u) {
  T f0 = op_log(u.v);
  T inv = op_recip(u.v);
  return detail::chain(u, f0, inv, -op_sqr(inv));
}

template <class T>
Jet<T> op_log2(const Jet<T>& u) {
  T f0 = op_log2(u.v);
  T inv = op_recip(u.v);
  T f1 = (1.0 / detail::kLn2) * inv;
  T f2 = (-1.0 / detail::kLn2) * op_sqr(inv);
  return detail::chain(u, f0, f1, f2);
}

template <class T>
Jet<T> op_sin(const Jet<T>& u) {
  T s = op_sin(u.v);
  T c = op_cos(u.v);
  return detail::chain(u, s, c, -s);
}

template <class T>
Jet<T> op_cos(const Jet<T>& u) {
  T s = op_sin(u.v);
  T c = op_cos(u.v);
  return detail::chain(u, c, -s, -c);
}

template <class T>
Jet<T> op_tan(const Jet<T>& u) {
  T t = op_tan(u.v);
  T sec2 = 1.0 + op_sqr(t);
  return detail::chain(u, t, sec2, 2.0 * (t * sec2));
}

template <class T>
Jet<T> op_atan(const Jet<T>& u) {
  T w = 1.0 + op_sqr(u.v);
  T inv = op_recip(w);
  return detail::chain(u, op_atan(u.v), inv, -2.0 * (u.v * op_sqr(inv)));
}

template <class T>
Jet<T> op_asin(const Jet<T>& u) {
  T f0 = op_asin(u.v);
  T r = 1.0 - op_sqr(u.v);           // must stay positive for the derivative
  T root = op_sqrt(r);
  T f1 = op_recip(root);
  T f2 = op_div(u.v, r * root);
  return detail::chain(u, f0, f1, f2);
}

template <class T>
Jet<T> op_gamma(const Jet<T>& u) {
  T g = op_gamma(u.v);
  T psi = op_digamma(u.v);
  T f2 = g * (op_sqr(psi) + op_trigamma(u.v));
  return detail::chain(u, g, g * psi, f2);
}

template <class T>
Jet<T> op_lngamma(const Jet<T>& u) {
  return detail::chain(u, op_lngamma(u.v), op_digamma(u.v), op_trigamma(u.v));
}

template <class T>
Jet<T> op_pow_int(const Jet<T>& a, long n) {
  if (n == 0) return Jet<T>(1.0);
  if (n < 0) return op_div(Jet<T>(1.0), op_pow_int(a, -n));
  Jet<T> base = a;
  Jet<T> acc(1.0);
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

template <class T>
Jet<T> op_pow(const Jet<T>& a, const Jet<T>& b) {
  return op_exp(b * op_log(a));
}

template <class T>
Jet<T> operator*(double c, const Jet<T>& a) {
  return {c * a.v, c * a.d1, c * a.d2};
}

}  // namespace wcert
