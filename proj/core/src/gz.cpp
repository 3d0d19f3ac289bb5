#include "flagpoly/gz.hpp"

#include <algorithm>
#include <functional>

#include "flagpoly/errors.hpp"
#include "flagpoly/fflv.hpp"
#include "flagpoly/table_index.hpp"

namespace flagpoly {
namespace {

void require_decreasing(std::span<const Rational> lambda) {
  if (lambda.size() < 2) throw UsageError("GZ polytope needs n >= 2");
  for (std::size_t l = 0; l + 1 < lambda.size(); ++l) {
    if (lambda[l] < lambda[l + 1]) {
      throw UsageError("weight is not dominant: lambda_" + std::to_string(l + 1) + " < lambda_" +
                       std::to_string(l + 2));
    }
  }
}

// Linear form for z^l_m: either a single coordinate or a constant (l = 0).
struct Entry {
  bool is_constant;
  std::size_t coord;
  Rational value;
};

Entry entry(std::span<const Rational> lambda, std::size_t l, std::size_t m) {
  if (l == 0) return {true, 0, lambda[m - 1]};
  return {false, flat_of(lambda.size(), l, m) - 1, Rational(0)};
}

// lhs - rhs <= 0 written as a halfspace.
Halfspace difference_le_zero(std::size_t d, const Entry& lhs, const Entry& rhs) {
  Halfspace h{RatVector(d, Rational(0)), Rational(0)};
  if (lhs.is_constant) h.rhs -= lhs.value; else h.coeffs[lhs.coord] += 1;
  if (rhs.is_constant) h.rhs += rhs.value; else h.coeffs[rhs.coord] -= 1;
  return h;
}

Report slice_report(const Weight& lambda, std::size_t k, const std::vector<Rational>& ts, bool with_hull,
                    const std::string& label) {
  const std::size_t n = lambda.n();
  const std::size_t d = table_dim(n);
  if (k < 1 || k > d) throw UsageError("slice lemma needs 1 <= k <= d");
  Report report;
  report.instance = label + " lambda=" + lambda.to_string() + " k=" + std::to_string(k);
  WeightPath path = mu_path(lambda, k);
  const Polytope outer = gz_face(lambda, k - 1);
  std::vector<RatVector> hull_points;
  for (const auto& t : ts) {
    RatVector z = shift_at(lambda, k, t);
    for (auto& c : z) c = -c;
    RatVector mu = mu_at(path, t);
    Polytope moved = translate(gz_face(mu, k), z);
    Polytope cut = slice(outer, k - 1, t);
    bool ok = equal(moved, cut);
    report.add("slice t=" + to_string(t), ok,
               ok ? "" : "G_{k-1} cut at z^i_j=" + to_string(t) + " differs from G_k(mu(t)) - z(t)");
    if (with_hull) {
      auto vs = vertices(moved);
      hull_points.insert(hull_points.end(), vs.begin(), vs.end());
    }
  }
  if (with_hull) {
    bool hull_ok = !hull_points.empty() && equal(convex_hull(d, hull_points), outer);
    report.add("hull reconstruction", hull_ok, hull_ok ? "" : "hull of slices differs from G_{k-1}");
  }
  return report;
}

}  // namespace

Polytope gz_polytope(std::span<const Rational> lambda) {
  require_decreasing(lambda);
  const std::size_t n = lambda.size();
  const std::size_t d = table_dim(n);
  std::vector<Halfspace> hs;
  for (std::size_t k = 1; k <= d; ++k) {
    TableIndex t = index_of(n, k);
    Entry self = entry(lambda, t.i, t.j);
    hs.push_back(difference_le_zero(d, self, entry(lambda, t.i - 1, t.j)));
    hs.push_back(difference_le_zero(d, entry(lambda, t.i - 1, t.j + 1), self));
  }
  return Polytope(d, std::move(hs));
}

Polytope gz_polytope(const Weight& lambda) {
  RatVector r = lambda.to_rational();
  return gz_polytope(std::span<const Rational>(r));
}

Polytope gz_face(std::span<const Rational> lambda, std::size_t k) {
  const std::size_t n = lambda.size();
  const std::size_t d = table_dim(n);
  if (k > d) throw UsageError("face index " + std::to_string(k) + " out of range");
  Polytope p = gz_polytope(lambda);
  std::vector<Halfspace> hs = p.halfspaces();
  for (std::size_t c = 1; c <= k; ++c) {
    TableIndex t = index_of(n, c);
    Entry self = entry(lambda, t.i, t.j);
    Entry below = entry(lambda, t.i - 1, t.j + 1);
    hs.push_back(difference_le_zero(d, self, below));
  }
  return Polytope(d, std::move(hs));
}

Polytope gz_face(const Weight& lambda, std::size_t k) {
  RatVector r = lambda.to_rational();
  return gz_face(std::span<const Rational>(r), k);
}

RatVector shift_at(const Weight& lambda, std::size_t k, const Rational& t) {
  const std::size_t n = lambda.n();
  const std::size_t d = table_dim(n);
  TableIndex idx = index_of(n, k);
  const long lo = lambda(idx.i + idx.j), hi = lambda(idx.j);
  if (t < lo || t > hi) {
    throw UsageError("t = " + to_string(t) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  RatVector z(d, Rational(0));
  for (std::size_t c = 1; c <= d; ++c) {
    TableIndex e = index_of(n, c);
    const std::size_t s = e.i + e.j;
    if (e.j > idx.j && s >= idx.j + 2 && s <= idx.i + idx.j && lambda(s) <= t) z[c - 1] = t - lambda(s);
  }
  return z;
}

Report check_slice_lemma_gz(const Weight& lambda, std::size_t k) {
  WeightPath path = mu_path(lambda, k);
  std::vector<Rational> ts;
  for (long t = path.lo; t <= path.hi; ++t) ts.emplace_back(t);
  return slice_report(lambda, k, ts, true, "gz slice lemma");
}

Report probe_slice_lemma_gz(const Weight& lambda, std::size_t k, long denominator) {
  if (denominator < 2) throw UsageError("probe denominator must be at least 2");
  WeightPath path = mu_path(lambda, k);
  std::vector<Rational> ts;
  for (long s = path.lo * denominator; s <= path.hi * denominator; ++s) {
    if (s % denominator != 0) ts.push_back(make_rational(s, denominator));
  }
  return slice_report(lambda, k, ts, false, "gz slice probe");
}

namespace {

void gz_rows(const Weight& lambda, const std::function<void(const std::vector<std::vector<long>>&)>& visit) {
  const std::size_t n = lambda.n();
  std::vector<std::vector<long>> rows(n);
  rows[0] = lambda.entries();
  auto fill = [&](auto&& self, std::size_t l, std::size_t m) -> void {
    if (l == n) {
      visit(rows);
      return;
    }
    if (m > n - l) {
      self(self, l + 1, 1);
      return;
    }
    for (long v = rows[l - 1][m]; v <= rows[l - 1][m - 1]; ++v) {
      rows[l][m - 1] = v;
      self(self, l, m + 1);
    }
  };
  for (std::size_t l = 1; l < n; ++l) rows[l].assign(n - l, 0);
  if (n == 1) {
    visit(rows);
    return;
  }
  fill(fill, 1, 1);
}

}  // namespace

LatticePointSet gz_lattice_points_fast(const Weight& lambda) {
  const std::size_t n = lambda.n();
  const std::size_t d = table_dim(n);
  std::vector<std::size_t> flat;  // flat coordinate of (l, m) in row-major order
  for (std::size_t l = 1; l < n; ++l) {
    for (std::size_t m = 1; m <= n - l; ++m) flat.push_back(flat_of(n, l, m) - 1);
  }
  LatticePointSet out;
  gz_rows(lambda, [&](const std::vector<std::vector<long>>& rows) {
    LatticePoint p(d, 0);
    std::size_t c = 0;
    for (std::size_t l = 1; l < n; ++l) {
      for (long v : rows[l]) p[flat[c++]] = v;
    }
    out.insert(std::move(p));
  });
  return out;
}

std::uint64_t gz_count_fast(const Weight& lambda) {
  std::uint64_t count = 0;
  gz_rows(lambda, [&](const std::vector<std::vector<long>>&) { ++count; });
  return count;
}

}  // namespace flagpoly
