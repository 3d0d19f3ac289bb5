#pragma once

#include "flagpoly/rational.hpp"
#include "flagpoly/ratmatrix.hpp"

namespace flagpoly {

enum class LpStatus { optimal, unbounded, infeasible };

/// Outcome of max c.x subject to A x <= b with x free.
/// For optimal results, `point` attains `value` and `dual` is a certificate:
/// dual >= 0, A^T dual = c and b . dual = value.
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  RatVector point;
  RatVector dual;

  bool optimal() const { return status == LpStatus::optimal; }
};

/// Exact two-phase dense-tableau simplex with Bland's rule.
LpResult lp_max(const RatVector& c, const RatMatrix& a, const RatVector& b);

}  // namespace flagpoly
