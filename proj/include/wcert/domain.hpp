#pragma once

#include <string>

#include "wcert/interval.hpp"

namespace wcert {

/// Which interval a claim is over, plus the numeric truncation actually
/// searched or certified.  (0,1] is truncated to [delta, 1] on the left and
/// [1,inf) is capped to [1, M]; every certificate and search records the
/// truncated box it covered.
struct DomainSpec {
  enum class Kind { UnitInterval, RayFromOne };

  Kind kind = Kind::UnitInterval;
  double left_cut = 1e-6;  // delta, UnitInterval only
  double right_cap = 10.0; // M, RayFromOne only

  static DomainSpec unit(double delta = 1e-6) {
    if (!(delta > 0.0 && delta < 1.0))
      throw Error(ErrorCode::InvalidArgument, "unit interval truncation requires 0 < delta < 1");
    return {Kind::UnitInterval, delta, 10.0};
  }

  static DomainSpec ray(double cap = 10.0) {
    if (!(cap > 1.0))
      throw Error(ErrorCode::InvalidArgument, "ray truncation requires cap > 1");
    return {Kind::RayFromOne, 1e-6, cap};
  }

  Interval truncated() const {
    return kind == Kind::UnitInterval ? Interval(left_cut, 1.0) : Interval(1.0, right_cap);
  }

  std::string name() const { return kind == Kind::UnitInterval ? "unit" : "ray"; }

  std::string describe() const {
    return kind == Kind::UnitInterval
               ? "[" + std::to_string(left_cut) + ", 1] (truncating (0,1])"
               : "[1, " + std::to_string(right_cap) + "] (truncating [1,inf))";
  }
};

}  // namespace wcert
