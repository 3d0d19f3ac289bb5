#include "flagpoly/fflv.hpp"

#include <algorithm>

#include "flagpoly/dyck.hpp"
#include "flagpoly/errors.hpp"

namespace flagpoly {
namespace {

void require_decreasing(std::span<const Rational> lambda) {
  if (lambda.size() < 2) throw UsageError("FFLV polytope needs n >= 2");
  for (std::size_t l = 0; l + 1 < lambda.size(); ++l) {
    if (lambda[l] < lambda[l + 1]) {
      throw UsageError("weight is not dominant: lambda_" + std::to_string(l + 1) + " < lambda_" +
                       std::to_string(l + 2));
    }
  }
}

RatVector shift_vector(std::size_t d, std::size_t coord, const Rational& amount) {
  RatVector v(d, Rational(0));
  v[coord] = amount;
  return v;
}

}  // namespace

Polytope fflv_polytope(std::span<const Rational> lambda) {
  require_decreasing(lambda);
  const std::size_t n = lambda.size();
  const std::size_t d = table_dim(n);
  std::vector<Halfspace> hs;
  for (std::size_t c = 0; c < d; ++c) {
    Halfspace h{RatVector(d, Rational(0)), Rational(0)};
    h.coeffs[c] = -1;
    hs.push_back(std::move(h));
  }
  for (const auto& path : all_dyck_paths(n)) {
    Halfspace h{RatVector(d, Rational(0)), lambda[path.i - 1] - lambda[path.j - 1]};
    for (auto c : path.coordinates(n)) h.coeffs[c] = 1;
    hs.push_back(std::move(h));
  }
  return Polytope(d, std::move(hs));
}

Polytope fflv_polytope(const Weight& lambda) {
  RatVector r = lambda.to_rational();
  return fflv_polytope(std::span<const Rational>(r));
}

Polytope fflv_face(std::span<const Rational> lambda, std::size_t k) {
  Polytope p = fflv_polytope(lambda);
  auto zeros = face_zero_set(lambda.size(), k);
  return with_zeros(p, zeros);
}

Polytope fflv_face(const Weight& lambda, std::size_t k) {
  RatVector r = lambda.to_rational();
  return fflv_face(std::span<const Rational>(r), k);
}

WeightPath mu_path(const Weight& lambda, std::size_t k) {
  TableIndex t = index_of(lambda.n(), k);
  return WeightPath{lambda, t, lambda(t.i + t.j), lambda(t.j)};
}

RatVector mu_at(const WeightPath& path, const Rational& t) {
  if (t < path.lo || t > path.hi) {
    throw UsageError("t = " + flagpoly::to_string(t) + " outside [" + std::to_string(path.lo) + ", " +
                     std::to_string(path.hi) + "]");
  }
  RatVector mu = path.base.to_rational();
  const std::size_t i = path.index.i, j = path.index.j;
  for (std::size_t l = j + 1; l <= i + j; ++l) mu[l - 1] = std::max(mu[l - 1], t);
  return mu;
}

Weight mu_at(const WeightPath& path, long t) {
  RatVector mu = mu_at(path, Rational(t));
  std::vector<long> e;
  for (const auto& x : mu) e.push_back(x.get_num().get_si());
  return Weight(std::move(e));  // dominance re-verified here
}

Report check_slice_lemma_fflv(const Weight& lambda, std::size_t k) {
  const std::size_t n = lambda.n();
  const std::size_t d = table_dim(n);
  if (k < 1 || k > d) throw UsageError("slice lemma needs 1 <= k <= d");
  Report report;
  report.instance = "fflv slice lemma lambda=" + lambda.to_string() + " k=" + std::to_string(k);
  WeightPath path = mu_path(lambda, k);
  const Polytope outer = fflv_face(lambda, k - 1);

  std::vector<RatVector> hull_points;
  for (long t = path.lo; t <= path.hi; ++t) {
    const Rational a = t - path.lo;
    Polytope lhs = translate(fflv_face(mu_at(path, t), k), shift_vector(d, k - 1, a));
    Polytope rhs = slice(outer, k - 1, a);
    bool ok = equal(lhs, rhs);
    report.add("slice t=" + std::to_string(t), ok,
               ok ? "" : "F_{k-1} slice at a_k=" + flagpoly::to_string(a) + " differs from shifted F_k(mu(t))");
    auto vs = vertices(lhs);
    hull_points.insert(hull_points.end(), vs.begin(), vs.end());
  }
  bool hull_ok = !hull_points.empty() && equal(convex_hull(d, hull_points), outer);
  report.add("hull reconstruction", hull_ok, hull_ok ? "" : "hull of slices differs from F_{k-1}");
  return report;
}

}  // namespace flagpoly
