#include "wcert/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>

namespace wcert {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Interval point_interval(double v) { return Interval(v); }

}  // namespace

const char* property_name(Property p) {
  switch (p) {
    case Property::LWeierstrass: return "l-weierstrass";
    case Property::RWeierstrass: return "r-weierstrass";
    case Property::Submultiplicative: return "submultiplicative";
    case Property::Weierstrass: return "weierstrass";
  }
  return "?";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Certified: return "certified";
    case Outcome::Refuted: return "refuted";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

double h_of(const Expression& f, double x) {
  Jet2 j = f.eval_jet2(x);
  return x * j.d1;
}

Interval h_of(const Expression& f, const Interval& x) {
  IntervalJet2 j = f.eval_jet2_interval(x);
  return x * j.d1;
}

double g_of(const Expression& f, double x) {
  Jet2 j = f.eval_jet2(x);
  return op_div(j.d1, x) + j.d2;
}

Interval g_of(const Expression& f, const Interval& x) {
  IntervalJet2 j = f.eval_jet2_interval(x);
  return op_div(j.d1, x) + j.d2;
}

// ---------------------------------------------------------------------------
// One-dimensional sign certification
// ---------------------------------------------------------------------------

SignCertificate certify_nonnegative(const std::function<Interval(const Interval&)>& fn,
                                    const Interval& box, const CertifyOptions& opt) {
  struct Item {
    Interval box;
    int depth;
  };
  SignCertificate out;
  std::deque<Item> work{{box, 0}};
  bool undecided_seen = false;
  int undecided_depth = -1;
  auto t0 = Clock::now();

  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    ++out.boxes;
    out.max_depth_used = std::max(out.max_depth_used, it.depth);

    if ((out.boxes & 63) == 0 && seconds_since(t0) > opt.time_budget_s) {
      out.status = SignCertificate::Status::Undecided;
      out.undecided_box = it.box;
      out.note = "time budget exhausted";
      return out;
    }

    Interval value = fn(it.box);
    if (value.lo > 0.0) continue;  // strict leaf
    if (value.lo >= -opt.tolerance) {
      out.strict = false;  // weak leaf
      continue;
    }
    if (value.hi < -opt.tolerance) {
      out.status = SignCertificate::Status::ViolationFound;
      out.violation_box = it.box;
      return out;
    }
    if (it.depth >= opt.max_depth || out.boxes >= opt.max_boxes || !(it.box.width() > 0.0)) {
      undecided_seen = true;
      if (it.depth > undecided_depth) {
        undecided_depth = it.depth;
        out.undecided_box = it.box;
      }
      if (out.boxes >= opt.max_boxes) {
        out.status = SignCertificate::Status::Undecided;
        out.note = "box budget exhausted";
        return out;
      }
      continue;
    }
    auto [left, right] = bisect(it.box);
    work.push_back({right, it.depth + 1});
    work.push_back({left, it.depth + 1});
  }

  if (undecided_seen) {
    out.status = SignCertificate::Status::Undecided;
    out.note = "maximum depth reached on some subboxes";
  } else {
    out.status = SignCertificate::Status::Certified;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Log-convex + monotone-pair criterion
// ---------------------------------------------------------------------------

LogConvexPairResult certify_logconvex_pair(const Expression& f, const DomainSpec& J,
                                           const CertifyOptions& opt) {
  LogConvexPairResult out;
  Interval box = J.truncated();

  auto logconvex_fn = [&f](const Interval& x) {
    IntervalJet2 j = f.eval_jet2_interval(x);
    return j.d2 * j.v - op_sqr(j.d1);
  };
  auto fprime_fn = [&f](const Interval& x) { return f.eval_jet2_interval(x).d1; };
  auto xf_prime_fn = [&f](const Interval& x) {
    IntervalJet2 j = f.eval_jet2_interval(x);
    return j.v + x * j.d1;  // (x f(x))'
  };

  SignCertificate lc = certify_nonnegative(logconvex_fn, box, opt);
  out.max_depth_used = lc.max_depth_used;
  out.boxes = lc.boxes;
  if (lc.status != SignCertificate::Status::Certified) {
    out.reason = "log-convexity (f''*f - f'^2 >= 0) not certified";
    return out;
  }

  auto negate = [](const std::function<Interval(const Interval&)>& fn) {
    return [fn](const Interval& x) { return -fn(x); };
  };

  // case 1: f and x*f(x) both decreasing
  SignCertificate fdec = certify_nonnegative(negate(fprime_fn), box, opt);
  out.boxes += fdec.boxes;
  if (fdec.status == SignCertificate::Status::Certified) {
    SignCertificate xfdec = certify_nonnegative(negate(xf_prime_fn), box, opt);
    out.boxes += xfdec.boxes;
    out.max_depth_used = std::max({out.max_depth_used, fdec.max_depth_used, xfdec.max_depth_used});
    if (xfdec.status == SignCertificate::Status::Certified) {
      out.certified = true;
      out.case_used = 1;
      return out;
    }
    out.reason = "f decreasing but x*f(x) not certified monotone the same way";
    return out;
  }

  // case 2: f and x*f(x) both increasing
  SignCertificate finc = certify_nonnegative(fprime_fn, box, opt);
  out.boxes += finc.boxes;
  if (finc.status == SignCertificate::Status::Certified) {
    SignCertificate xfinc = certify_nonnegative(xf_prime_fn, box, opt);
    out.boxes += xfinc.boxes;
    out.max_depth_used = std::max({out.max_depth_used, finc.max_depth_used, xfinc.max_depth_used});
    if (xfinc.status == SignCertificate::Status::Certified) {
      out.certified = true;
      out.case_used = 2;
      return out;
    }
    out.reason = "f increasing but x*f(x) not certified monotone the same way";
    return out;
  }

  out.reason = "f not certified strictly monotone on the box";
  return out;
}

// ---------------------------------------------------------------------------
// Two-dimensional submultiplicativity certificate
// ---------------------------------------------------------------------------

namespace {

struct DefectEnclosure {
  Interval value{0.0, 0.0};
  bool log_strict = false;  // the log-space route proved the defect positive
  Interval grad_x{0.0, 0.0};
  Interval grad_y{0.0, 0.0};
  bool has_grad = false;
};

struct PlainDefect {
  Interval value;
  double scale;  // magnitude of f(x) f(y) over the box, floored at 1
};

// Plain enclosure of T(x, y) = f(x) f(y) - f(xy) over X x Y.
PlainDefect defect_plain(const Expression& f, const Interval& X, const Interval& Y) {
  Interval fx = f.eval_interval(X);
  Interval fy = f.eval_interval(Y);
  Interval fxy = f.eval_interval(X * Y);
  Interval prod = fx * fy;
  return {prod - fxy, std::max(1.0, prod.mag())};
}

// Sharper enclosure for boxes the plain form cannot decide.  Two forms share
// one set of jet evaluations:
//
//  - second-order centered form  T(c) + grad(c).d + 1/2 d^T H(box) d  with the
//    Hessian enclosed over the whole box (point terms go through degenerate
//    intervals so rounding stays accounted for); this is what terminates on
//    the equality edges x = 1 and y = 1;
//  - a mean-value form of the log defect  ln f(x) + ln f(y) - ln f(xy), whose
//    gradient nearly cancels where f has a large dynamic range, so strictly
//    positive defects far from the edges are accepted in a few boxes even
//    when f spans many orders of magnitude.
DefectEnclosure defect_sharp(const Expression& f, const Interval& X, const Interval& Y,
                             const Interval& plain) {
  DefectEnclosure out;
  double cx = X.mid(), cy = Y.mid();
  Interval icx = point_interval(cx), icy = point_interval(cy);

  IntervalJet2 jcx = f.eval_jet2_interval(icx);
  IntervalJet2 jcy = f.eval_jet2_interval(icy);
  IntervalJet2 jcxy = f.eval_jet2_interval(icx * icy);

  Interval t_c = jcx.v * jcy.v - jcxy.v;
  Interval tx_c = jcx.d1 * jcy.v - icy * jcxy.d1;
  Interval ty_c = jcx.v * jcy.d1 - icx * jcxy.d1;

  Interval XY = X * Y;
  IntervalJet2 jX = f.eval_jet2_interval(X);
  IntervalJet2 jY = f.eval_jet2_interval(Y);
  IntervalJet2 jXY = f.eval_jet2_interval(XY);

  Interval txx = jX.d2 * jY.v - op_sqr(Y) * jXY.d2;
  Interval tyy = jX.v * jY.d2 - op_sqr(X) * jXY.d2;
  Interval txy = jX.d1 * jY.d1 - jXY.d1 - XY * jXY.d2;

  Interval dx = widen_outward(X.lo - cx, X.hi - cx, "sub");
  Interval dy = widen_outward(Y.lo - cy, Y.hi - cy, "sub");

  Interval centered = t_c + tx_c * dx + ty_c * dy + 0.5 * (txx * op_sqr(dx)) + txy * (dx * dy) +
                      0.5 * (tyy * op_sqr(dy));
  out.value = meet(plain, centered);
  out.grad_x = jX.d1 * jY.v - Y * jXY.d1;
  out.grad_y = jX.v * jY.d1 - X * jXY.d1;
  out.has_grad = true;

  if (jX.v.lo > 0.0 && jY.v.lo > 0.0 && jXY.v.lo > 0.0 && jcx.v.lo > 0.0 && jcy.v.lo > 0.0 &&
      jcxy.v.lo > 0.0) {
    Interval l_c = op_log(jcx.v) + op_log(jcy.v) - op_log(jcxy.v);
    Interval qx = op_div(jX.d1, jX.v);
    Interval qy = op_div(jY.d1, jY.v);
    Interval qxy = op_div(jXY.d1, jXY.v);
    Interval lx = qx - Y * qxy;  // d/dx of the log defect over the box
    Interval ly = qy - X * qxy;
    Interval log_mv = l_c + lx * dx + ly * dy;
    out.log_strict = log_mv.lo > 0.0;
  }
  return out;
}

}  // namespace

SubmultCertificate certify_submultiplicative(const Expression& f, const DomainSpec& J,
                                             const CertifyOptions& opt) {
  struct Item {
    Interval x, y;
    int depth_x, depth_y;
  };
  SubmultCertificate out;
  Interval box = J.truncated();
  std::deque<Item> work{{box, box, 0, 0}};
  out.strict = true;
  bool undecided_seen = false;
  int undecided_depth = -1;
  auto t0 = Clock::now();

  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    ++out.boxes;
    out.max_depth_used = std::max(out.max_depth_used, std::max(it.depth_x, it.depth_y));

    if ((out.boxes & 63) == 0 && seconds_since(t0) > opt.time_budget_s) {
      out.status = SignCertificate::Status::Undecided;
      out.undecided_x = it.x;
      out.undecided_y = it.y;
      return out;
    }

    PlainDefect plain = defect_plain(f, it.x, it.y);
    Interval enc = plain.value;
    // weak acceptance is relative to the local product magnitude: the terms
    // forming the defect carry relative enclosure error, so an absolute
    // threshold is unattainable where f is large (the threshold coincides
    // with the absolute one wherever f is of order 1, in particular on the
    // equality edges of every normalized candidate)
    double accept = opt.tolerance * plain.scale;
    DefectEnclosure sharp;
    bool decided = enc.lo >= -accept || enc.hi < -accept;
    if (!decided) {
      sharp = defect_sharp(f, it.x, it.y, enc);
      if (sharp.log_strict) continue;
      enc = sharp.value;
    }

    if (enc.lo > 0.0) continue;
    if (enc.lo >= -accept) {
      out.strict = false;
      continue;
    }
    if (enc.hi < -accept) {
      out.status = SignCertificate::Status::ViolationFound;
      out.violation_x = it.x;
      out.violation_y = it.y;
      return out;
    }

    bool x_splittable = it.depth_x < opt.max_depth && it.x.width() > 0.0;
    bool y_splittable = it.depth_y < opt.max_depth && it.y.width() > 0.0;
    if ((!x_splittable && !y_splittable) || out.boxes >= opt.max_boxes) {
      undecided_seen = true;
      if (it.depth_x + it.depth_y > undecided_depth) {
        undecided_depth = it.depth_x + it.depth_y;
        out.undecided_x = it.x;
        out.undecided_y = it.y;
      }
      if (out.boxes >= opt.max_boxes) {
        out.status = SignCertificate::Status::Undecided;
        return out;
      }
      continue;
    }

    // Split the axis with the larger (width x gradient) product; that keeps
    // boxes thin across the equality edges instead of merely square.
    bool split_x;
    if (!x_splittable) {
      split_x = false;
    } else if (!y_splittable) {
      split_x = true;
    } else if (sharp.has_grad) {
      double sx = it.x.width() * sharp.grad_x.mag();
      double sy = it.y.width() * sharp.grad_y.mag();
      split_x = sx == sy ? it.x.width() >= it.y.width() : sx > sy;
    } else {
      split_x = it.x.width() >= it.y.width();
    }

    if (split_x) {
      auto [l, r] = bisect(it.x);
      work.push_back({r, it.y, it.depth_x + 1, it.depth_y});
      work.push_back({l, it.y, it.depth_x + 1, it.depth_y});
    } else {
      auto [l, r] = bisect(it.y);
      work.push_back({it.x, r, it.depth_x, it.depth_y + 1});
      work.push_back({it.x, l, it.depth_x, it.depth_y + 1});
    }
  }

  out.status = undecided_seen ? SignCertificate::Status::Undecided
                              : SignCertificate::Status::Certified;
  return out;
}

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

namespace {

double violation_value(const Expression& f, Property p, double x, double y) {
  try {
    double fx = f.eval_point(x);
    double fy = f.eval_point(y);
    double fxy = f.eval_point(x * y);
    switch (p) {
      case Property::LWeierstrass: return (fx + fy - 1.0) - fxy;
      case Property::RWeierstrass: return fxy - (fx + fy - 1.0);
      case Property::Submultiplicative: return fxy - fx * fy;
      default: return -std::numeric_limits<double>::infinity();
    }
  } catch (const DomainError&) {
    return -std::numeric_limits<double>::infinity();
  }
}

Witness make_witness(const Expression& f, Property p, double x, double y) {
  double fx = f.eval_point(x);
  double fy = f.eval_point(y);
  double fxy = f.eval_point(x * y);
  Witness w;
  w.x = x;
  w.y = y;
  switch (p) {
    case Property::LWeierstrass:
      w.lhs = fx + fy - 1.0;
      w.rhs = fxy;
      break;
    case Property::RWeierstrass:
      w.lhs = fxy;
      w.rhs = fx + fy - 1.0;
      break;
    default:
      w.lhs = fxy;
      w.rhs = fx * fy;
      break;
  }
  w.margin = w.lhs - w.rhs;
  return w;
}

// Coordinate ternary ascent of the violation around (x, y).
void refine_local(const Expression& f, Property p, const Interval& box, double& x, double& y,
                  double radius) {
  for (int round = 0; round < 3; ++round) {
    for (int coord = 0; coord < 2; ++coord) {
      double lo = std::max(box.lo, (coord == 0 ? x : y) - radius);
      double hi = std::min(box.hi, (coord == 0 ? x : y) + radius);
      for (int step = 0; step < 48; ++step) {
        double m1 = lo + (hi - lo) / 3.0;
        double m2 = hi - (hi - lo) / 3.0;
        double v1 = coord == 0 ? violation_value(f, p, m1, y) : violation_value(f, p, x, m1);
        double v2 = coord == 0 ? violation_value(f, p, m2, y) : violation_value(f, p, x, m2);
        if (v1 < v2)
          lo = m1;
        else
          hi = m2;
      }
      if (coord == 0)
        x = 0.5 * (lo + hi);
      else
        y = 0.5 * (lo + hi);
    }
    radius /= 8.0;
  }
}

std::optional<Witness> search_impl(const Expression& f, const DomainSpec& J, Property p,
                                   int grid_n, bool refine,
                                   const std::optional<std::pair<double, double>>& hint) {
  Interval box = J.truncated();
  int n = std::max(2, grid_n);
  double step = box.width() / n;

  double best_v = -std::numeric_limits<double>::infinity();
  double best_x = box.mid(), best_y = box.mid();
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = box.lo + (i + 0.5) * step;

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = violation_value(f, p, grid[i], grid[j]);
      if (v > best_v) {
        best_v = v;
        best_x = grid[i];
        best_y = grid[j];
      }
    }
  }

  if (refine) refine_local(f, p, box, best_x, best_y, step);

  if (hint) {
    double hx = std::clamp(hint->first, box.lo, box.hi);
    double hy = std::clamp(hint->second, box.lo, box.hi);
    refine_local(f, p, box, hx, hy, std::max(step, 1e-3 * box.width()));
    if (violation_value(f, p, hx, hy) > violation_value(f, p, best_x, best_y)) {
      best_x = hx;
      best_y = hy;
    }
  }

  double v = violation_value(f, p, best_x, best_y);
  if (!(v > 0.0)) return std::nullopt;
  return make_witness(f, p, best_x, best_y);
}

}  // namespace

std::optional<Witness> search_counterexample(const Expression& f, const DomainSpec& J,
                                             Property property, int grid_n, bool refine) {
  return search_impl(f, J, property, grid_n, refine, std::nullopt);
}

// ---------------------------------------------------------------------------
// Classification pipeline
// ---------------------------------------------------------------------------

NormalizationCheck check_normalization(const Expression& f, const DomainSpec& J,
                                       const ClassifyConfig& cfg) {
  NormalizationCheck out;
  out.f1 = f.eval_point(1.0);
  CertifyOptions opt;
  opt.tolerance = 0.0;  // positivity must be strict
  opt.max_depth = std::min(cfg.max_depth, 30);
  opt.max_boxes = 20000;
  opt.time_budget_s = cfg.time_budget_s;
  auto value_fn = [&f](const Interval& x) { return f.eval_interval(x); };
  SignCertificate pos = certify_nonnegative(value_fn, J.truncated(), opt);
  out.positive_on_box = pos.status == SignCertificate::Status::Certified && pos.strict;
  return out;
}

namespace {

CertifyOptions certify_options(const ClassifyConfig& cfg) {
  CertifyOptions opt;
  opt.tolerance = cfg.cert_tolerance;
  opt.max_depth = cfg.max_depth;
  opt.max_boxes = cfg.max_boxes;
  opt.time_budget_s = cfg.time_budget_s;
  return opt;
}

PropertyVerdict classify_one_sided(const Expression& f, const DomainSpec& J,
                                   const ClassifyConfig& cfg, Property prop) {
  PropertyVerdict v;
  v.property = prop;
  Interval box = J.truncated();
  CertifyOptions opt = certify_options(cfg);
  bool left = prop == Property::LWeierstrass;

  auto g_fn = [&f, left](const Interval& x) {
    Interval g = g_of(f, x);
    return left ? g : -g;
  };

  SignCertificate cert = certify_nonnegative(g_fn, box, opt);
  if (cert.status == SignCertificate::Status::Certified) {
    v.outcome = Outcome::Certified;
    v.certificate = Certificate{left ? "h-monotone" : "h-antitone", box,        std::nullopt,
                                cert.max_depth_used,               cert.boxes,  cert.strict,
                                opt.tolerance};
    return v;
  }

  if (left && cert.status == SignCertificate::Status::Undecided) {
    LogConvexPairResult lcp = certify_logconvex_pair(f, J, opt);
    if (lcp.certified) {
      v.outcome = Outcome::Certified;
      v.certificate = Certificate{"log-convex-pair", box,       std::nullopt, lcp.max_depth_used,
                                  lcp.boxes,         false,     opt.tolerance};
      return v;
    }
  }

  std::optional<Witness> w = search_counterexample(f, J, prop, cfg.grid_n, true);
  if (w && w->margin > cfg.report_tolerance) {
    v.outcome = Outcome::Refuted;
    v.witness = w;
    return v;
  }

  v.outcome = Outcome::Inconclusive;
  v.reason = cert.status == SignCertificate::Status::ViolationFound
                 ? "sign criterion fails on a subbox yet no violating pair was found"
                 : "sign certificate undecided (" + (cert.note.empty() ? "depth" : cert.note) +
                       ") and no violating pair was found";
  if (cert.status == SignCertificate::Status::ViolationFound) {
    v.undecided_x = cert.violation_box;
  } else {
    v.undecided_x = cert.undecided_box;
  }
  return v;
}

PropertyVerdict classify_submultiplicative(const Expression& f, const DomainSpec& J,
                                           const ClassifyConfig& cfg) {
  PropertyVerdict v;
  v.property = Property::Submultiplicative;
  Interval box = J.truncated();
  CertifyOptions opt = certify_options(cfg);

  SubmultCertificate cert = certify_submultiplicative(f, J, opt);
  if (cert.status == SignCertificate::Status::Certified) {
    v.outcome = Outcome::Certified;
    v.certificate = Certificate{"direct-subdivision", box,        box,         cert.max_depth_used,
                                cert.boxes,           cert.strict, opt.tolerance};
    return v;
  }

  std::optional<std::pair<double, double>> hint;
  if (cert.status == SignCertificate::Status::ViolationFound)
    hint = std::make_pair(cert.violation_x.mid(), cert.violation_y.mid());
  std::optional<Witness> w =
      search_impl(f, J, Property::Submultiplicative, cfg.grid_n, true, hint);
  if (w && w->margin > cfg.report_tolerance) {
    v.outcome = Outcome::Refuted;
    v.witness = w;
    return v;
  }

  v.outcome = Outcome::Inconclusive;
  v.reason = cert.status == SignCertificate::Status::ViolationFound
                 ? "subdivision found a suspect subbox but the search could not confirm a margin"
                 : "subdivision budget exhausted before covering the box";
  v.undecided_x = cert.status == SignCertificate::Status::ViolationFound ? cert.violation_x
                                                                         : cert.undecided_x;
  v.undecided_y = cert.status == SignCertificate::Status::ViolationFound ? cert.violation_y
                                                                         : cert.undecided_y;
  return v;
}

}  // namespace

ClassifyResult classify(const Expression& f, const DomainSpec& J, const ClassifyConfig& cfg) {
  ClassifyResult res;
  res.expression = f.str();
  res.domain = J;
  res.normalization = check_normalization(f, J, cfg);
  if (!res.normalization.ok()) return res;

  PropertyVerdict lw = classify_one_sided(f, J, cfg, Property::LWeierstrass);
  PropertyVerdict rw = classify_one_sided(f, J, cfg, Property::RWeierstrass);
  PropertyVerdict sub = classify_submultiplicative(f, J, cfg);

  PropertyVerdict w;
  w.property = Property::Weierstrass;
  if (lw.outcome == Outcome::Certified && sub.outcome == Outcome::Certified) {
    w.outcome = Outcome::Certified;
    w.certificate = Certificate{"conjunction",
                                J.truncated(),
                                J.truncated(),
                                std::max(lw.certificate->max_depth_used,
                                         sub.certificate->max_depth_used),
                                lw.certificate->leaves + sub.certificate->leaves,
                                lw.certificate->strict,
                                cfg.cert_tolerance};
  } else if (lw.outcome == Outcome::Refuted) {
    w.outcome = Outcome::Refuted;
    w.witness = lw.witness;
    w.reason = "left inequality refuted";
  } else if (sub.outcome == Outcome::Refuted) {
    w.outcome = Outcome::Refuted;
    w.witness = sub.witness;
    w.reason = "submultiplicativity refuted";
  } else {
    w.outcome = Outcome::Inconclusive;
    w.reason = lw.outcome != Outcome::Certified ? "left inequality not certified"
                                                : "submultiplicativity not certified";
  }

  res.verdicts = {std::move(lw), std::move(rw), std::move(sub), std::move(w)};
  return res;
}

// ---------------------------------------------------------------------------
// Closure rules
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void missing(const std::string& what) {
  throw Error(ErrorCode::Precondition, "precondition not certified: " + what);
}

bool same_domain(const DomainSpec& a, const DomainSpec& b) {
  return a.kind == b.kind && a.truncated().lo == b.truncated().lo &&
         a.truncated().hi == b.truncated().hi;
}

bool certified_via(const ClassifyResult& r, Property p, const char* criterion) {
  const PropertyVerdict* v = r.find(p);
  return v && v->outcome == Outcome::Certified && v->certificate &&
         v->certificate->criterion == criterion;
}

bool certified(const ClassifyResult& r, Property p) {
  const PropertyVerdict* v = r.find(p);
  return v && v->outcome == Outcome::Certified;
}

}  // namespace

PropertyVerdict closure_product(std::span<const ClassifyResult> factors) {
  if (factors.size() < 2)
    throw Error(ErrorCode::Precondition, "product closure needs at least two factors");
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (!same_domain(factors[0].domain, factors[i].domain))
      missing("all factors classified over the same domain");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const ClassifyResult& r = factors[i];
    if (!certified(r, Property::Submultiplicative))
      missing("factor " + std::to_string(i + 1) + " (" + r.expression +
              "): certified submultiplicative");
    if (!certified_via(r, Property::LWeierstrass, "h-monotone"))
      missing("factor " + std::to_string(i + 1) + " (" + r.expression +
              "): slope-transform criterion certificate");
  }
  PropertyVerdict v;
  v.property = Property::Weierstrass;
  v.outcome = Outcome::Certified;
  v.certificate = Certificate{"product-closure", factors[0].domain.truncated(),
                              factors[0].domain.truncated(), 0, 0, false, 0.0};
  return v;
}

PropertyVerdict closure_compose(const Expression& g, const ClassifyResult& g_result,
                                const ClassifyResult& f_result, const DomainSpec& J,
                                const ClassifyConfig& cfg) {
  if (!same_domain(g_result.domain, J) || !same_domain(f_result.domain, J))
    missing("both factors classified over the target domain");
  if (!certified_via(f_result, Property::LWeierstrass, "h-monotone"))
    missing("inner function: slope-transform criterion certificate");
  if (!g_result.normalization.ok()) missing("outer function: normalization g(1) = 1");

  Interval box = J.truncated();
  CertifyOptions opt = certify_options(cfg);

  // g must map J into J (checked over the truncated box, up to tolerance)
  Interval range = g.eval_interval(box);
  bool maps = J.kind == DomainSpec::Kind::UnitInterval
                  ? range.lo > 0.0 && range.hi <= 1.0 + cfg.cert_tolerance
                  : range.lo >= 1.0 - cfg.cert_tolerance;
  if (!maps) missing("outer function maps the domain into itself");

  auto gprime = [&g](const Interval& x) { return g.eval_jet2_interval(x).d1; };
  auto gsecond = [&g](const Interval& x) { return g.eval_jet2_interval(x).d2; };
  if (certify_nonnegative(gprime, box, opt).status != SignCertificate::Status::Certified)
    missing("outer function non-decreasing (g' >= 0)");
  if (certify_nonnegative(gsecond, box, opt).status != SignCertificate::Status::Certified)
    missing("outer derivative non-decreasing (g'' >= 0)");

  PropertyVerdict v;
  bool both_sub = certified(f_result, Property::Submultiplicative) &&
                  certified(g_result, Property::Submultiplicative);
  v.property = both_sub ? Property::Weierstrass : Property::LWeierstrass;
  v.outcome = Outcome::Certified;
  v.certificate = Certificate{"composition-closure", box,
                              both_sub ? std::optional<Interval>(box) : std::nullopt,
                              0, 0, false, cfg.cert_tolerance};
  return v;
}

PropertyVerdict closure_power(const ClassifyResult& f_result, double alpha) {
  const PropertyVerdict* w = f_result.find(Property::Weierstrass);
  if (!w || w->outcome != Outcome::Certified)
    missing("base function: certified Weierstrass verdict");
  if (alpha == 1.0) return *w;
  if (!(alpha > 1.0))
    throw Error(ErrorCode::Precondition, "power closure requires an exponent greater than 1");
  PropertyVerdict v;
  v.property = Property::Weierstrass;
  v.outcome = Outcome::Certified;
  v.certificate = Certificate{"power-closure", f_result.domain.truncated(),
                              f_result.domain.truncated(), 0, 0, false, 0.0};
  return v;
}

}  // namespace wcert
