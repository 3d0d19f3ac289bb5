#include "flagpoly/lp.hpp"

#include <limits>
#include <optional>

#include "flagpoly/errors.hpp"

namespace flagpoly {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dictionary in tableau form: for each row r, x_basis[r] + sum_j a(r,j) x_j = rhs[r],
// and z = objval + sum_j cost[j] x_j over nonbasic j.
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;
  std::vector<Rational> cost;
  Rational objval = 0;

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  void pivot(std::size_t r, std::size_t e) {
    const Rational inv = 1 / at(r, e);
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    }
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(at(i, e)) == 0) continue;
      const Rational f = at(i, e);
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(at(r, j)) != 0) at(i, j) -= f * at(r, j);
      }
      rhs[i] -= f * rhs[r];
    }
    if (sgn(cost[e]) != 0) {
      const Rational f = cost[e];
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(at(r, j)) != 0) cost[j] -= f * at(r, j);
      }
      objval += f * rhs[r];
    }
    basis[r] = e;
  }

  // Bland's rule: lowest-index improving column, ties in the ratio test
  // broken by the lowest basic variable index. Returns false on unboundedness.
  bool optimize() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(cost[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t r = 0; r < rows; ++r) {
        if (sgn(at(r, enter)) <= 0) continue;
        Rational ratio = rhs[r] / at(r, enter);
        if (leave == kNone || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_max(const RatVector& c, const RatMatrix& a, const RatVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = c.size();
  if ((m > 0 && a.cols() != n) || b.size() != m) throw UsageError("lp_max: inconsistent dimensions");

  // Columns: p_0..p_{n-1}, q_0..q_{n-1} (x = p - q), slacks, then one artificial.
  const std::size_t slack0 = 2 * n;
  const std::size_t art = 2 * n + m;
  Tableau t;
  t.rows = m;
  t.cols = art + 1;
  t.a.assign(t.rows * t.cols, Rational(0));
  t.rhs = b;
  t.basis.resize(m);
  t.cost.assign(t.cols, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(a(r, j)) == 0) continue;
      t.at(r, j) = a(r, j);
      t.at(r, n + j) = -a(r, j);
    }
    t.at(r, slack0 + r) = 1;
    t.at(r, art) = -1;
    t.basis[r] = slack0 + r;
  }

  LpResult result;
  std::size_t most_negative = kNone;
  for (std::size_t r = 0; r < m; ++r) {
    if (sgn(b[r]) < 0 && (most_negative == kNone || b[r] < b[most_negative])) most_negative = r;
  }
  if (most_negative != kNone) {
    t.cost[art] = -1;
    t.pivot(most_negative, art);
    t.optimize();
    if (sgn(t.objval) < 0) {
      result.status = LpStatus::infeasible;
      return result;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis[r] != art) continue;
      for (std::size_t j = 0; j < art; ++j) {
        if (sgn(t.at(r, j)) != 0) {
          t.pivot(r, j);
          break;
        }
      }
    }
  }
  // Freeze the artificial column out of phase 2.
  for (std::size_t r = 0; r < m; ++r) t.at(r, art) = 0;

  t.cost.assign(t.cols, Rational(0));
  t.objval = 0;
  auto original_cost = [&](std::size_t j) -> Rational {
    if (j < n) return c[j];
    if (j < 2 * n) return -c[j - n];
    return 0;
  };
  for (std::size_t j = 0; j < art; ++j) t.cost[j] = original_cost(j);
  for (std::size_t r = 0; r < m; ++r) {
    const Rational cb = original_cost(t.basis[r]);
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j < art; ++j) {
      if (sgn(t.at(r, j)) != 0) t.cost[j] -= cb * t.at(r, j);
    }
    t.objval += cb * t.rhs[r];
  }
  if (!t.optimize()) {
    result.status = LpStatus::unbounded;
    return result;
  }

  result.status = LpStatus::optimal;
  result.value = t.objval;
  RatVector primal(art, Rational(0));
  for (std::size_t r = 0; r < m; ++r) primal[t.basis[r]] = t.rhs[r];
  result.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) result.point[j] = primal[j] - primal[n + j];
  result.dual.resize(m);
  for (std::size_t r = 0; r < m; ++r) result.dual[r] = -t.cost[slack0 + r];
  return result;
}

}  // namespace flagpoly
