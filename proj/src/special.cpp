#include "wcert/special.hpp"

#include <cmath>
#include <mutex>

namespace wcert {

namespace {

// Lanczos rational approximation, N=13, g=6.024680040776729583740234375.
// The numerator absorbs sqrt(2*pi); coefficients are in ascending order and
// the denominator expands to z(z+1)...(z+11).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr double kLanczosNum[13] = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};

constexpr double kLanczosDen[13] = {
    0.0,         39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0, 13339535.0,
    2637558.0,   357423.0,   32670.0,     1925.0,      66.0,        1.0,
};

double lanczos_sum(double z) {
  double num = 0.0, den = 0.0;
  if (z <= 1.0) {
    for (int k = 12; k >= 0; --k) {
      num = num * z + kLanczosNum[k];
      den = den * z + kLanczosDen[k];
    }
  } else {
    // evaluate in 1/z so that large arguments stay well scaled
    double iz = 1.0 / z;
    for (int k = 0; k <= 12; ++k) {
      num = num * iz + kLanczosNum[k];
      den = den * iz + kLanczosDen[k];
    }
  }
  return num / den;
}

[[noreturn]] void require_positive(const char* op, double lo, double hi) {
  throw DomainError(op, lo, hi, std::string(op) + " requires a positive argument");
}

constexpr double kEulerGammaLiteral = 0.57721566490153286061;

// relative error bound attached to interval-mode gamma-family enclosures
constexpr double kGammaIntervalSlack = 1e-11;

Interval family_widen(double raw_lo, double raw_hi, const char* op) {
  double slack_lo = kGammaIntervalSlack * std::max(1.0, std::abs(raw_lo));
  double slack_hi = kGammaIntervalSlack * std::max(1.0, std::abs(raw_hi));
  return widen_outward(raw_lo - slack_lo, raw_hi + slack_hi, op);
}

}  // namespace

double op_lngamma(double x) {
  if (!(x > 0.0)) require_positive("lngamma", x, x);
  if (x < 0.5) return op_lngamma(x + 1.0) - std::log(x);
  double zgh = x + kLanczosG - 0.5;
  return (x - 0.5) * std::log(zgh) - zgh + std::log(lanczos_sum(x));
}

double op_gamma(double x) {
  if (!(x > 0.0)) require_positive("gamma", x, x);
  if (x < 0.5) return op_gamma(x + 1.0) / x;
  double zgh = x + kLanczosG - 0.5;
  if ((x - 0.5) * std::log(zgh) - zgh > 705.0)
    throw DomainError("gamma", x, "gamma overflow");
  return std::pow(zgh, x - 0.5) * std::exp(-zgh) * lanczos_sum(x);
}

double op_digamma(double x) {
  if (!(x > 0.0)) require_positive("digamma", x, x);
  double r = 0.0;
  while (x < 10.0) {
    r -= 1.0 / x;
    x += 1.0;
  }
  // ln x - 1/(2x) - sum B_{2n} / (2n x^{2n}), truncated where the next term
  // is below double resolution for x >= 10
  double i2 = 1.0 / (x * x);
  double s = i2 * (1.0 / 12 -
             i2 * (1.0 / 120 -
             i2 * (1.0 / 252 -
             i2 * (1.0 / 240 -
             i2 * (1.0 / 132 -
             i2 * (691.0 / 32760 -
             i2 * (1.0 / 12)))))));
  return r + std::log(x) - 0.5 / x - s;
}

double op_trigamma(double x) {
  if (!(x > 0.0)) require_positive("trigamma", x, x);
  double r = 0.0;
  while (x < 10.0) {
    r += 1.0 / (x * x);
    x += 1.0;
  }
  double inv = 1.0 / x;
  double i2 = inv * inv;
  double s = inv * (1.0 +
             inv * (0.5 +
             inv * (1.0 / 6 -
             i2 * (1.0 / 30 -
             i2 * (1.0 / 42 -
             i2 * (1.0 / 30 -
             i2 * (5.0 / 66 -
             i2 * (691.0 / 2730 -
             i2 * (7.0 / 6)))))))));
  return r + s;
}

Interval op_gamma(const Interval& x) {
  if (!(x.lo > 0.0)) require_positive("gamma", x.lo, x.hi);
  double xm = constants().x_min;
  double raw_lo, raw_hi;
  if (x.hi <= xm) {  // decreasing branch
    raw_lo = op_gamma(x.hi);
    raw_hi = op_gamma(x.lo);
  } else if (x.lo >= xm) {  // increasing branch
    raw_lo = op_gamma(x.lo);
    raw_hi = op_gamma(x.hi);
  } else {  // straddles the minimizer
    raw_lo = op_gamma(xm);
    raw_hi = std::max(op_gamma(x.lo), op_gamma(x.hi));
  }
  return family_widen(raw_lo, raw_hi, "gamma");
}

Interval op_lngamma(const Interval& x) {
  if (!(x.lo > 0.0)) require_positive("lngamma", x.lo, x.hi);
  double xm = constants().x_min;
  double raw_lo, raw_hi;
  if (x.hi <= xm) {
    raw_lo = op_lngamma(x.hi);
    raw_hi = op_lngamma(x.lo);
  } else if (x.lo >= xm) {
    raw_lo = op_lngamma(x.lo);
    raw_hi = op_lngamma(x.hi);
  } else {
    raw_lo = op_lngamma(xm);
    raw_hi = std::max(op_lngamma(x.lo), op_lngamma(x.hi));
  }
  return family_widen(raw_lo, raw_hi, "lngamma");
}

Interval op_digamma(const Interval& x) {
  if (!(x.lo > 0.0)) require_positive("digamma", x.lo, x.hi);
  return family_widen(op_digamma(x.lo), op_digamma(x.hi), "digamma");  // increasing
}

Interval op_trigamma(const Interval& x) {
  if (!(x.lo > 0.0)) require_positive("trigamma", x.lo, x.hi);
  return family_widen(op_trigamma(x.hi), op_trigamma(x.lo), "trigamma");  // decreasing
}

double gamma_slice(double a, double x) {
  if (!(a > 0.0)) require_positive("gamma_slice parameter", a, a);
  if (!(x > 0.0)) require_positive("gamma_slice argument", x, x);
  return op_gamma(a * x) / op_gamma(a);
}

double xi_series_sum(double x, long n_terms, double* uncertainty) {
  double s = 0.0;
  // summed small-to-large to keep the accumulation error down
  for (long n = n_terms; n >= 1; --n) {
    double nn = static_cast<double>(n);
    double d = nn + x;
    s += (2.0 * nn * x + x * x) / (nn * d * d);
  }
  // The summand g(t) = (2tx + x^2) / (t (t+x)^2) is decreasing in t, so the
  // tail over n > N is bracketed by the integrals over [N+1, inf) and
  // [N, inf); the antiderivative is -ln(t/(t+x)) - x/(t+x).
  auto tail_integral = [x](double t) { return std::log1p(x / t) + x / (t + x); };
  double hi = tail_integral(static_cast<double>(n_terms));
  double lo = tail_integral(static_cast<double>(n_terms) + 1.0);
  if (uncertainty) *uncertainty = hi - lo;
  return s + 0.5 * (lo + hi);
}

XMinResult compute_x_min() {
  double lo = 1.0, hi = 2.0;
  // digamma(1) = -euler_gamma < 0 < 1 - euler_gamma = digamma(2)
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (op_digamma(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double xm = 0.5 * (lo + hi);
  return {xm, xm - 1.0};
}

double compute_xi(long n_terms) {
  double target = kEulerGammaLiteral;
  double lo = 0.1, hi = 0.4;
  double s_lo = xi_series_sum(lo, n_terms);
  double s_hi = xi_series_sum(hi, n_terms);
  if (!(s_lo < target && target < s_hi))
    throw Error(ErrorCode::Convergence,
                "xi bracket does not straddle the target: series(0.1)=" + std::to_string(s_lo) +
                    " series(0.4)=" + std::to_string(s_hi));
  while (hi - lo > 1e-8) {
    double mid = 0.5 * (lo + hi);
    if (xi_series_sum(mid, n_terms) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

const Constants& constants() {
  static const Constants c = [] {
    Constants k{};
    k.euler_gamma = kEulerGammaLiteral;
    double cross = -op_digamma(1.0);
    if (std::abs(cross - k.euler_gamma) > 1e-10)
      throw Error(ErrorCode::Internal, "euler_gamma cross-check against -digamma(1) failed");
    XMinResult xm = compute_x_min();
    k.x_min = xm.x_min;
    k.x1 = xm.x1;
    k.digamma_at_x_min = op_digamma(k.x_min);
    k.xi_series_terms = 100000;
    k.xi = compute_xi(k.xi_series_terms);
    double unc = 0.0;
    k.xi_series_residual = xi_series_sum(k.xi, k.xi_series_terms, &unc) - k.euler_gamma;
    k.xi_tolerance = 1e-8 + unc;
    return k;
  }();
  return c;
}

}  // namespace wcert
