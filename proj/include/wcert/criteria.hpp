#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wcert/domain.hpp"
#include "wcert/expr.hpp"

namespace wcert {

enum class Property { LWeierstrass, RWeierstrass, Submultiplicative, Weierstrass };
enum class Outcome { Certified, Refuted, Inconclusive };

const char* property_name(Property p);
const char* outcome_name(Outcome o);

/// Subdivision proof summary attached to a Certified verdict.
struct Certificate {
  std::string criterion;          // which sufficient condition closed the proof
  Interval box_x{0.0, 0.0};       // truncated box actually covered
  std::optional<Interval> box_y;  // second axis for two-dimensional certificates
  int max_depth_used = 0;
  long leaves = 0;
  bool strict = false;      // every leaf had enclosure lower bound > 0
  double tolerance = 0.0;   // weak-leaf acceptance threshold used
};

/// Concrete violating pair.  The violated inequality is oriented lhs <= rhs,
/// so margin = lhs - rhs > 0.
struct Witness {
  double x = 0.0;
  double y = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

struct PropertyVerdict {
  Property property = Property::LWeierstrass;
  Outcome outcome = Outcome::Inconclusive;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
  std::string reason;                   // set for Inconclusive
  std::optional<Interval> undecided_x;  // deepest undecided subbox, if any
  std::optional<Interval> undecided_y;
};

/// Gate checked before any classification: f(1) must equal 1 (to 1e-9) and f
/// must be certifiably positive over the truncated box.
struct NormalizationCheck {
  double f1 = 0.0;
  bool positive_on_box = false;
  bool ok() const { return std::abs(f1 - 1.0) <= 1e-9 && positive_on_box; }
};

struct ClassifyConfig {
  int max_depth = 40;              // per-axis bisection depth cap
  long max_boxes = 400000;         // deterministic work budget per certificate
  double time_budget_s = 5.0;      // per-property wall-clock safety valve
  double cert_tolerance = 1e-9;    // weak leaf acceptance: lower bound >= -tol
  double report_tolerance = 1e-9;  // minimum margin for a reported refutation
  int grid_n = 512;                // counterexample search grid
};

struct ClassifyResult {
  std::string expression;
  DomainSpec domain;
  NormalizationCheck normalization;
  std::vector<PropertyVerdict> verdicts;  // l-W, r-W, submultiplicative, Weierstrass

  const PropertyVerdict* find(Property p) const {
    for (const auto& v : verdicts)
      if (v.property == p) return &v;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Criterion building blocks
// ---------------------------------------------------------------------------

/// Slope transform x * f'(x); the left inequality holds whenever this is
/// non-decreasing over the domain.
double h_of(const Expression& f, double x);
Interval h_of(const Expression& f, const Interval& x);

/// Sign form of the slope-transform derivative: f'(x)/x + f''(x).  This is
/// H'(x)/x, so nonnegativity over x > 0 is equivalent to monotone H; the form
/// avoids dividing by f', which may vanish.
double g_of(const Expression& f, double x);
Interval g_of(const Expression& f, const Interval& x);

struct CertifyOptions {
  double tolerance = 1e-9;
  int max_depth = 40;
  long max_boxes = 400000;
  double time_budget_s = 5.0;
};

struct SignCertificate {
  enum class Status { Certified, Undecided, ViolationFound } status = Status::Undecided;
  bool strict = true;  // meaningful when Certified
  int max_depth_used = 0;
  long boxes = 0;
  Interval violation_box{0.0, 0.0};
  Interval undecided_box{0.0, 0.0};
  std::string note;
};

/// Interval branch and bound for fn >= 0 on the box.  A leaf is accepted when
/// its enclosure lower bound exceeds -tolerance (strictly positive lower
/// bounds on every leaf make the certificate strict); a subbox whose
/// enclosure upper bound is below -tolerance is returned as sign-failure
/// evidence.
SignCertificate certify_nonnegative(const std::function<Interval(const Interval&)>& fn,
                                    const Interval& box, const CertifyOptions& opt);

struct LogConvexPairResult {
  bool certified = false;
  int case_used = 0;  // 1 = both decreasing, 2 = both increasing
  std::string reason;
  int max_depth_used = 0;
  long boxes = 0;
};

/// Alternative left-inequality criterion: log-convexity of f (via the sign of
/// f''*f - f'^2) combined with f and x*f(x) strictly monotone in the same
/// direction.
LogConvexPairResult certify_logconvex_pair(const Expression& f, const DomainSpec& J,
                                           const CertifyOptions& opt);

struct SubmultCertificate {
  SignCertificate::Status status = SignCertificate::Status::Undecided;
  bool strict = false;
  int max_depth_used = 0;
  long boxes = 0;
  Interval violation_x{0.0, 0.0}, violation_y{0.0, 0.0};
  Interval undecided_x{0.0, 0.0}, undecided_y{0.0, 0.0};
};

/// Direct two-dimensional subdivision certificate of
/// f(x) f(y) - f(xy) >= 0 over the truncated J x J.  Box enclosures combine
/// the plain form with a second-order centered form; the latter is what lets
/// the subdivision terminate on the equality edges x = 1 and y = 1.
SubmultCertificate certify_submultiplicative(const Expression& f, const DomainSpec& J,
                                             const CertifyOptions& opt);

/// Deterministic grid scan over the truncated J x J for a violation of the
/// property's defining inequality, followed by coordinate ternary descent on
/// the best cell.  Returns the witness with maximal violation margin, or
/// nothing if no positive margin was found.
std::optional<Witness> search_counterexample(const Expression& f, const DomainSpec& J,
                                             Property property, int grid_n = 512,
                                             bool refine = true);

NormalizationCheck check_normalization(const Expression& f, const DomainSpec& J,
                                       const ClassifyConfig& cfg = {});

/// Full pipeline: normalization gate, then per property certification with
/// counterexample search fallback, then the Weierstrass conjunction.
ClassifyResult classify(const Expression& f, const DomainSpec& J, const ClassifyConfig& cfg = {});

// ---------------------------------------------------------------------------
// Closure rules (one-directional: they derive Certified verdicts from
// certified inputs and never refute)
// ---------------------------------------------------------------------------

/// Product of factors, each certified submultiplicative and certified through
/// the slope-transform criterion on the same domain.
PropertyVerdict closure_product(std::span<const ClassifyResult> factors);

/// Composition g after f: requires f certified through the slope-transform
/// criterion, g mapping J into J with g(1) = 1 and g, g' non-decreasing
/// (certified by interval sign checks here); if both factors are certified
/// submultiplicative the conclusion upgrades to Weierstrass.
PropertyVerdict closure_compose(const Expression& g, const ClassifyResult& g_result,
                                const ClassifyResult& f_result, const DomainSpec& J,
                                const ClassifyConfig& cfg = {});

/// Power f^alpha for alpha > 1 of a certified Weierstrass function
/// (alpha = 1 passes the input verdict through).
PropertyVerdict closure_power(const ClassifyResult& f_result, double alpha);

}  // namespace wcert
