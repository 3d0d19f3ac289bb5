#include "flagpoly/polytope.hpp"

#include <algorithm>
#include <sstream>

#include "flagpoly/double_description.hpp"
#include "flagpoly/errors.hpp"

namespace flagpoly {
namespace {

Integer coefficient_scale(const RatVector& coeffs, Integer& gcd_num) {
  Integer l = 1;
  gcd_num = 0;
  for (const auto& c : coeffs) {
    if (sgn(c) == 0) continue;
    l = lcm(l, c.get_den());
    gcd_num = gcd(gcd_num, c.get_num());
  }
  return l;
}

RatVector unit(std::size_t dim, std::size_t k, int sign = 1) {
  RatVector v(dim, Rational(0));
  v[k] = sign;
  return v;
}

void require_dim(const Polytope& p, std::size_t n, const char* what) {
  if (p.dim() != n) {
    throw UsageError(std::string(what) + ": dimension " + std::to_string(n) +
                     " does not match polytope dimension " + std::to_string(p.dim()));
  }
}

std::vector<Halfspace> equation_pair(const Halfspace& eq) {
  Halfspace neg{eq.coeffs, -eq.rhs};
  for (auto& c : neg.coeffs) c = -c;
  return {eq, neg};
}

// Eliminates the pivot columns of an RREF equation system from h.
Halfspace reduce_against(Halfspace h, const std::vector<Halfspace>& rref_equations,
                         const std::vector<std::size_t>& pivots) {
  for (std::size_t r = 0; r < rref_equations.size(); ++r) {
    const Rational f = h.coeffs[pivots[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < h.coeffs.size(); ++c) h.coeffs[c] -= f * rref_equations[r].coeffs[c];
    h.rhs -= f * rref_equations[r].rhs;
  }
  return h;
}

bool all_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

struct EquationSystem {
  std::vector<Halfspace> rows;  // RREF, pivot coefficient 1
  std::vector<std::size_t> pivots;
};

EquationSystem echelon(std::size_t dim, const std::vector<Halfspace>& equations) {
  EquationSystem out;
  if (equations.empty()) return out;
  RatMatrix m(0, dim + 1);
  for (const auto& e : equations) {
    RatVector row = e.coeffs;
    row.push_back(e.rhs);
    m.append_row(row);
  }
  Rref r = rref(std::move(m));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == dim) throw DomainError("inconsistent equation system");
    RatVector row = r.matrix.row(i);
    Rational rhs = row.back();
    row.pop_back();
    out.rows.push_back({std::move(row), rhs});
    out.pivots.push_back(r.pivots[i]);
  }
  return out;
}

}  // namespace

Halfspace normalized(const Halfspace& h) {
  Integer g;
  Integer l = coefficient_scale(h.coeffs, g);
  if (g == 0) throw UsageError("halfspace with all-zero coefficients");
  Rational scale = make_rational(l, g);
  Halfspace out{h.coeffs, h.rhs * scale};
  for (auto& c : out.coeffs) c *= scale;
  return out;
}

Halfspace normalized_equation(const Halfspace& h) {
  Halfspace out = normalized(h);
  auto lead = std::find_if(out.coeffs.begin(), out.coeffs.end(),
                           [](const Rational& x) { return sgn(x) != 0; });
  if (sgn(*lead) < 0) {
    for (auto& c : out.coeffs) c = -c;
    out.rhs = -out.rhs;
  }
  return out;
}

bool canonical_less(const Halfspace& a, const Halfspace& b) {
  // Larger coefficients first so "x1 <= ..." precedes "-x1 <= ...".
  for (std::size_t i = 0; i < std::min(a.coeffs.size(), b.coeffs.size()); ++i) {
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] > b.coeffs[i];
  }
  if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
  return a.rhs < b.rhs;
}

std::string format_halfspace(const Halfspace& h, const std::vector<std::string>& names,
                             const char* relation) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
    const Rational& c = h.coeffs[i];
    if (sgn(c) == 0) continue;
    std::string name = i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    if (mag != 1) out << to_string(mag) << "*";
    out << name;
  }
  if (first) out << "0";
  out << " " << relation << " " << to_string(h.rhs);
  return out.str();
}

Polytope::Polytope(std::size_t dim, std::vector<Halfspace> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
  if (dim_ == 0) throw UsageError("polytope dimension must be positive");
  for (const auto& h : halfspaces_) {
    if (h.coeffs.size() != dim_) throw UsageError("halfspace dimension does not match polytope");
    if (all_zero(h.coeffs)) throw UsageError("halfspace with all-zero coefficients");
  }
  for (std::size_t k = 0; k < dim_; ++k) {
    for (int sign : {1, -1}) {
      LpResult r = maximize(unit(dim_, k, sign));
      if (r.status == LpStatus::infeasible) return;
      if (r.status == LpStatus::unbounded) {
        throw UsageError("polytope is unbounded along coordinate " + std::to_string(k + 1));
      }
    }
  }
}

RatMatrix Polytope::constraint_matrix() const {
  RatMatrix m(0, dim_);
  for (const auto& h : halfspaces_) m.append_row(h.coeffs);
  return m;
}

RatVector Polytope::constraint_rhs() const {
  RatVector b;
  b.reserve(halfspaces_.size());
  for (const auto& h : halfspaces_) b.push_back(h.rhs);
  return b;
}

LpResult Polytope::maximize(const RatVector& objective) const {
  if (objective.size() != dim_) throw UsageError("objective dimension does not match polytope");
  return lp_max(objective, constraint_matrix(), constraint_rhs());
}

bool Polytope::is_empty() const {
  return maximize(RatVector(dim_, Rational(0))).status == LpStatus::infeasible;
}

Polytope Polytope::canonical() const {
  std::vector<Halfspace> hs;
  hs.reserve(halfspaces_.size());
  for (const auto& h : halfspaces_) hs.push_back(normalized(h));
  std::sort(hs.begin(), hs.end(), canonical_less);
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return Polytope(dim_, std::move(hs));
}

bool contains(const Polytope& p, std::span<const Rational> x) {
  require_dim(p, x.size(), "contains");
  for (const auto& h : p.halfspaces()) {
    if (dot(h.coeffs, x) > h.rhs) return false;
  }
  return true;
}

bool contains(const Polytope& p, const std::vector<std::int64_t>& x) {
  RatVector v = to_rational(x);
  return contains(p, std::span<const Rational>(v));
}

bool is_subset(const Polytope& p, const Polytope& q) {
  require_dim(q, p.dim(), "is_subset");
  if (p.is_empty()) return true;
  for (const auto& h : q.halfspaces()) {
    LpResult r = p.maximize(h.coeffs);
    if (!r.optimal() || r.value > h.rhs) return false;
  }
  return true;
}

bool equal(const Polytope& p, const Polytope& q) {
  require_dim(q, p.dim(), "equal");
  return is_subset(p, q) && is_subset(q, p);
}

AffineHull affine_hull(const Polytope& p) {
  AffineHull out;
  if (p.is_empty()) return out;
  std::vector<Halfspace> implicit;
  for (const auto& h : p.halfspaces()) {
    RatVector neg = h.coeffs;
    for (auto& c : neg) c = -c;
    LpResult r = p.maximize(neg);
    if (r.optimal() && -r.value == h.rhs) implicit.push_back(h);
  }
  EquationSystem eqs = echelon(p.dim(), implicit);
  for (auto& e : eqs.rows) out.equations.push_back(normalized_equation(e));
  out.dimension = static_cast<int>(p.dim() - eqs.rows.size());
  return out;
}

FacetDescription irredundant(const Polytope& p) {
  if (p.is_empty()) throw DomainError("irredundant: polytope is empty");
  const std::size_t dim = p.dim();
  FacetDescription out;

  std::vector<Halfspace> implicit, candidates;
  for (const auto& h : p.halfspaces()) {
    RatVector neg = h.coeffs;
    for (auto& c : neg) c = -c;
    LpResult r = p.maximize(neg);
    (r.optimal() && -r.value == h.rhs ? implicit : candidates).push_back(h);
  }
  EquationSystem eqs = echelon(dim, implicit);
  out.dimension = static_cast<int>(dim - eqs.rows.size());
  for (const auto& e : eqs.rows) out.equations.push_back(normalized_equation(e));

  std::vector<Halfspace> reduced;
  for (const auto& h : candidates) {
    Halfspace r = reduce_against(h, eqs.rows, eqs.pivots);
    if (all_zero(r.coeffs)) continue;  // constant on the hull and not tight: never a facet
    reduced.push_back(normalized(r));
  }
  std::sort(reduced.begin(), reduced.end(), canonical_less);
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

  std::vector<Halfspace> base;
  for (const auto& e : eqs.rows) {
    for (auto& h : equation_pair(e)) base.push_back(std::move(h));
  }
  std::vector<bool> keep(reduced.size(), true);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    RatMatrix a(0, dim);
    RatVector b;
    for (const auto& h : base) {
      a.append_row(h.coeffs);
      b.push_back(h.rhs);
    }
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      if (j == i || !keep[j]) continue;
      a.append_row(reduced[j].coeffs);
      b.push_back(reduced[j].rhs);
    }
    LpResult r = lp_max(reduced[i].coeffs, a, b);
    if (r.optimal() && r.value <= reduced[i].rhs) keep[i] = false;
  }
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (keep[i]) out.facets.push_back(reduced[i]);
  }
  return out;
}

Polytope from_facets(std::size_t dim, const FacetDescription& f) {
  std::vector<Halfspace> hs = f.facets;
  for (const auto& e : f.equations) {
    for (auto& h : equation_pair(e)) hs.push_back(std::move(h));
  }
  return Polytope(dim, std::move(hs));
}

std::vector<RatVector> vertices(const Polytope& p) {
  const std::size_t dim = p.dim();
  if (dim > kMaxVertexDim) {
    throw UnsupportedSize("vertex enumeration limited to dimension " + std::to_string(kMaxVertexDim));
  }
  // Homogenize: (x, x0) with coeffs . x - rhs * x0 <= 0 and x0 >= 0.
  if (p.is_empty()) return {};
  std::vector<IntRow> rows;
  for (const auto& h : p.halfspaces()) {
    RatVector r = h.coeffs;
    r.push_back(-h.rhs);
    rows.push_back(primitive(r));
  }
  IntRow x0(dim + 1, Integer(0));
  x0[dim] = -1;
  rows.push_back(x0);
  std::vector<RatVector> out;
  for (const auto& ray : extreme_rays(rows, dim + 1)) {
    if (sgn(ray[dim]) <= 0) continue;
    RatVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = make_rational(ray[i], ray[dim]);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polytope convex_hull(std::size_t dim, const std::vector<RatVector>& points) {
  if (points.empty()) throw DomainError("convex_hull of an empty point set");
  if (dim > kMaxVertexDim) {
    throw UnsupportedSize("hull recovery limited to dimension " + std::to_string(kMaxVertexDim));
  }
  for (const auto& pt : points) {
    if (pt.size() != dim) throw UsageError("convex_hull: point of the wrong dimension");
  }
  // Affine hull equations: annihilator of the difference vectors.
  RatMatrix diffs(0, dim);
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(dim);
    for (std::size_t c = 0; c < dim; ++c) d[c] = points[i][c] - points[0][c];
    diffs.append_row(d);
  }
  std::vector<Halfspace> equations;
  std::vector<RatVector> normals =
      diffs.rows() == 0 ? std::vector<RatVector>{} : nullspace(diffs);
  if (diffs.rows() == 0) {
    for (std::size_t c = 0; c < dim; ++c) normals.push_back(unit(dim, c));
  }
  for (auto& a : normals) equations.push_back({a, dot(a, points[0])});
  EquationSystem eqs = echelon(dim, equations);

  std::vector<bool> is_pivot(dim, false);
  for (auto c : eqs.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < dim; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  std::vector<Halfspace> hs;
  for (const auto& e : eqs.rows) {
    for (auto& h : equation_pair(normalized_equation(e))) hs.push_back(std::move(h));
  }
  const std::size_t m = free_cols.size();
  if (m > 0) {
    // Facet normals (a, b) of the projected full-dimensional point set: a . p - b <= 0.
    std::vector<IntRow> rows;
    for (const auto& pt : points) {
      RatVector r;
      for (auto c : free_cols) r.push_back(pt[c]);
      r.push_back(-1);
      rows.push_back(primitive(r));
    }
    for (const auto& ray : extreme_rays(rows, m + 1)) {
      bool trivial = std::all_of(ray.begin(), ray.end() - 1, [](const Integer& z) { return sgn(z) == 0; });
      if (trivial) continue;
      Halfspace h{RatVector(dim, Rational(0)), Rational(ray[m])};
      for (std::size_t i = 0; i < m; ++i) h.coeffs[free_cols[i]] = ray[i];
      hs.push_back(normalized(h));
    }
  }
  std::sort(hs.begin(), hs.end(), canonical_less);
  return Polytope(dim, std::move(hs));
}

Polytope dilate(const Polytope& p, long m) {
  if (m <= 0) throw UsageError("dilation factor must be positive");
  std::vector<Halfspace> hs = p.halfspaces();
  for (auto& h : hs) h.rhs *= m;
  return Polytope(p.dim(), std::move(hs));
}

Polytope translate(const Polytope& p, std::span<const Rational> shift) {
  require_dim(p, shift.size(), "translate");
  std::vector<Halfspace> hs = p.halfspaces();
  for (auto& h : hs) h.rhs += dot(h.coeffs, shift);
  return Polytope(p.dim(), std::move(hs));
}

Polytope slice(const Polytope& p, std::size_t coord, const Rational& value) {
  if (coord >= p.dim()) throw UsageError("slice coordinate out of range");
  std::vector<Halfspace> hs;
  for (const auto& h : p.halfspaces()) {
    Halfspace s = h;
    if (sgn(s.coeffs[coord]) != 0) {
      s.rhs -= s.coeffs[coord] * value;
      s.coeffs[coord] = 0;
      if (all_zero(s.coeffs)) s = h;  // keep the original; the fixing pair below decides it
    }
    hs.push_back(std::move(s));
  }
  hs.push_back({unit(p.dim(), coord, 1), value});
  hs.push_back({unit(p.dim(), coord, -1), -value});
  return Polytope(p.dim(), std::move(hs));
}

Polytope with_zeros(const Polytope& p, std::span<const std::size_t> zeros) {
  std::vector<Halfspace> hs = p.halfspaces();
  for (auto k : zeros) {
    if (k >= p.dim()) throw UsageError("zeroed coordinate out of range");
    hs.push_back({unit(p.dim(), k, 1), Rational(0)});
    hs.push_back({unit(p.dim(), k, -1), Rational(0)});
  }
  return Polytope(p.dim(), std::move(hs));
}

Polytope project_zeros(const Polytope& p, std::span<const std::size_t> zeros) {
  std::vector<bool> zeroed(p.dim(), false);
  for (auto k : zeros) {
    if (k >= p.dim()) throw UsageError("zeroed coordinate out of range");
    zeroed[k] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < p.dim(); ++c) {
    if (!zeroed[c]) keep.push_back(c);
  }
  if (keep.empty()) throw UsageError("project_zeros would leave no coordinates");
  std::vector<Halfspace> hs;
  bool infeasible = false;
  for (const auto& h : p.halfspaces()) {
    Halfspace r{RatVector(keep.size()), h.rhs};
    for (std::size_t i = 0; i < keep.size(); ++i) r.coeffs[i] = h.coeffs[keep[i]];
    if (all_zero(r.coeffs)) {
      if (sgn(r.rhs) < 0) infeasible = true;
      continue;
    }
    hs.push_back(std::move(r));
  }
  if (infeasible) {
    hs.push_back({unit(keep.size(), 0, 1), Rational(-1)});
    hs.push_back({unit(keep.size(), 0, -1), Rational(0)});
  }
  return Polytope(keep.size(), std::move(hs));
}

Polytope intersect(const Polytope& p, const Polytope& q) {
  require_dim(q, p.dim(), "intersect");
  std::vector<Halfspace> hs = p.halfspaces();
  hs.insert(hs.end(), q.halfspaces().begin(), q.halfspaces().end());
  return Polytope(p.dim(), std::move(hs));
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  require_dim(q, p.dim(), "minkowski_sum");
  auto vp = vertices(p);
  auto vq = vertices(q);
  if (vp.empty() || vq.empty()) throw DomainError("minkowski_sum with an empty polytope");
  std::vector<RatVector> sums;
  for (const auto& a : vp) {
    for (const auto& b : vq) {
      RatVector s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return convex_hull(p.dim(), sums);
}

}  // namespace flagpoly
