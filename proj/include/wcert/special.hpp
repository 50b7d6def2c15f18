#pragma once

#include "wcert/interval.hpp"

namespace wcert {

// Gamma-family point evaluations, x > 0 only.  Relative accuracy is well
// inside 1e-12 on [1e-3, 50] (Lanczos rational approximation for gamma,
// argument recurrence plus an asymptotic tail for digamma/trigamma).
double op_gamma(double x);
double op_lngamma(double x);
double op_digamma(double x);
double op_trigamma(double x);

// Interval enclosures built from the point routines: a certified relative
// error bound of 1e-11 around each endpoint, then monotonicity splitting
// (gamma decreases up to its minimizer and increases after it; digamma is
// increasing, trigamma decreasing).
Interval op_gamma(const Interval& x);
Interval op_lngamma(const Interval& x);
Interval op_digamma(const Interval& x);
Interval op_trigamma(const Interval& x);

/// Normalized gamma slice: gamma(a*x) / gamma(a), for fixed a > 0.
double gamma_slice(double a, double x);

/// Numeric constants used throughout classification and the report suites.
///
/// x_min is the unique positive minimizer of gamma, x1 = x_min - 1, and xi is
/// the root of the series sum_{n>=1} (2nx + x^2) / (n (n+x)^2) = euler_gamma.
/// Everything is recomputed on first use; euler_gamma itself is a stored
/// literal cross-checked against -digamma(1).
struct Constants {
  double euler_gamma;
  double x_min;
  double x1;
  double xi;
  double digamma_at_x_min;   // residual of the x_min root solve
  double xi_series_residual; // series(xi) - euler_gamma
  long xi_series_terms;      // truncation length used for the series
  double xi_tolerance;       // bracket width + series uncertainty at the root
};

const Constants& constants();

/// Partial sum of (2nx + x^2) / (n (n+x)^2) over n = 1..n_terms plus the
/// midpoint of a closed-form integral bracket for the tail.  The bracket
/// width (uncertainty of the returned value) is stored in *uncertainty when
/// non-null; it is below 1e-9 for x <= 0.5 at the default truncation.
double xi_series_sum(double x, long n_terms = 100000, double* uncertainty = nullptr);

struct XMinResult {
  double x_min;
  double x1;
};

/// Bisection root of digamma on [1, 2] to 1e-12 (the bracket is guaranteed:
/// digamma(1) < 0 < digamma(2)).
XMinResult compute_x_min();

/// Bisection root of xi_series_sum(x) = euler_gamma on [0.1, 0.4].
double compute_xi(long n_terms = 100000);

}  // namespace wcert
