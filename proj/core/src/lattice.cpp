#include "flagpoly/lattice.hpp"

#include <algorithm>
#include <limits>

#include "flagpoly/errors.hpp"

namespace flagpoly {
namespace {

// Fourier-Motzkin elimination of the last coordinate, followed by removal of
// duplicate and LP-redundant inequalities.
std::vector<Halfspace> eliminate_last(const std::vector<Halfspace>& hs) {
  const std::size_t n = hs.front().coeffs.size();
  const std::size_t last = n - 1;
  std::vector<Halfspace> kept, pos, neg;
  for (const auto& h : hs) {
    int s = sgn(h.coeffs[last]);
    if (s == 0) {
      kept.push_back({RatVector(h.coeffs.begin(), h.coeffs.end() - 1), h.rhs});
    } else {
      (s > 0 ? pos : neg).push_back(h);
    }
  }
  for (const auto& p : pos) {
    for (const auto& q : neg) {
      const Rational fp = -q.coeffs[last];
      const Rational fq = p.coeffs[last];
      Halfspace c{RatVector(last), fp * p.rhs + fq * q.rhs};
      for (std::size_t i = 0; i < last; ++i) c.coeffs[i] = fp * p.coeffs[i] + fq * q.coeffs[i];
      kept.push_back(std::move(c));
    }
  }

  std::vector<Halfspace> out;
  bool infeasible = false;
  for (auto& h : kept) {
    bool zero = std::all_of(h.coeffs.begin(), h.coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
    if (zero) {
      if (sgn(h.rhs) < 0) infeasible = true;
      continue;
    }
    out.push_back(normalized(h));
  }
  if (infeasible) throw DomainError("projection of an empty polytope");
  std::sort(out.begin(), out.end(), canonical_less);
  // Same normal, keep the tightest rhs.
  std::vector<Halfspace> tight;
  for (auto& h : out) {
    if (!tight.empty() && tight.back().coeffs == h.coeffs) continue;
    tight.push_back(std::move(h));
  }

  std::vector<bool> keep(tight.size(), true);
  for (std::size_t i = 0; i < tight.size(); ++i) {
    RatMatrix a(0, last);
    RatVector b;
    for (std::size_t j = 0; j < tight.size(); ++j) {
      if (j == i || !keep[j]) continue;
      a.append_row(tight[j].coeffs);
      b.push_back(tight[j].rhs);
    }
    if (a.rows() == 0) continue;
    LpResult r = lp_max(tight[i].coeffs, a, b);
    if (r.optimal() && r.value <= tight[i].rhs) keep[i] = false;
  }
  std::vector<Halfspace> result;
  for (std::size_t i = 0; i < tight.size(); ++i) {
    if (keep[i]) result.push_back(std::move(tight[i]));
  }
  return result;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

}  // namespace

BoundingBox integer_bounding_box(const Polytope& p) {
  BoundingBox box;
  for (std::size_t k = 0; k < p.dim(); ++k) {
    RatVector e(p.dim(), Rational(0));
    e[k] = 1;
    LpResult hi = p.maximize(e);
    if (!hi.optimal()) throw DomainError("bounding box of an empty polytope");
    e[k] = -1;
    LpResult lo = p.maximize(e);
    box.hi.push_back(floor_of(hi.value));
    box.lo.push_back(ceil_of(-lo.value));
  }
  return box;
}

LatticeEnumerator::LatticeEnumerator(const Polytope& p) : dim_(p.dim()) {
  if (p.is_empty()) {
    empty_ = true;
    return;
  }
  std::vector<std::vector<Halfspace>> projected(dim_);
  std::vector<Halfspace> current;
  for (const auto& h : p.halfspaces()) current.push_back(normalized(h));
  for (std::size_t level = dim_; level-- > 0;) {
    projected[level] = current;
    if (level > 0) current = eliminate_last(current);
  }

  // Integer coefficients after normalization; the rhs can be floored since
  // only integer points are sought.
  levels_.resize(dim_);
  for (std::size_t level = 0; level < dim_; ++level) {
    for (const auto& h : projected[level]) {
      if (sgn(h.coeffs[level]) == 0) continue;  // already enforced at an earlier level
      Row r;
      for (const auto& c : h.coeffs) r.coeffs.push_back(c.get_num());
      r.rhs = floor_of(h.rhs);
      levels_[level].push_back(std::move(r));
    }
  }

  // Machine-word path when every partial sum provably fits.
  BoundingBox box = integer_bounding_box(p);
  Integer bound = 0;
  for (std::size_t k = 0; k < dim_; ++k) bound = std::max({bound, Integer(abs(box.lo[k])), Integer(abs(box.hi[k]))});
  Integer worst = 0;
  for (const auto& level : levels_) {
    for (const auto& r : level) {
      Integer s = abs(r.rhs);
      for (const auto& c : r.coeffs) s += abs(c) * (bound + 1);
      worst = std::max(worst, s);
    }
  }
  fast_ = worst < Integer(std::numeric_limits<std::int64_t>::max() / 4);
  if (fast_) {
    fast_levels_.resize(dim_);
    for (std::size_t level = 0; level < dim_; ++level) {
      for (const auto& r : levels_[level]) {
        FastRow f;
        for (const auto& c : r.coeffs) f.coeffs.push_back(c.get_si());
        f.rhs = r.rhs.get_si();
        fast_levels_[level].push_back(std::move(f));
      }
    }
  }
}

template <typename Visit>
void LatticeEnumerator::walk_fast(std::size_t level, LatticePoint& x, Visit& visit) const {
  std::int64_t lo = std::numeric_limits<std::int64_t>::min();
  std::int64_t hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& r : fast_levels_[level]) {
    std::int64_t rem = r.rhs;
    for (std::size_t i = 0; i < level; ++i) rem -= r.coeffs[i] * x[i];
    const std::int64_t a = r.coeffs[level];
    if (a > 0) {
      hi = std::min(hi, floor_div(rem, a));
    } else {
      lo = std::max(lo, ceil_div(rem, a));
    }
  }
  if (lo > hi) return;
  if (visit(level, lo, hi, x)) return;
  for (std::int64_t v = lo; v <= hi; ++v) {
    x[level] = v;
    walk_fast(level + 1, x, visit);
  }
}

template <typename Visit>
void LatticeEnumerator::walk_exact(std::size_t level, std::vector<Integer>& x, Visit& visit) const {
  bool has_lo = false, has_hi = false;
  Integer lo, hi;
  for (const auto& r : levels_[level]) {
    Integer rem = r.rhs;
    for (std::size_t i = 0; i < level; ++i) rem -= r.coeffs[i] * x[i];
    const Integer& a = r.coeffs[level];
    if (sgn(a) > 0) {
      Integer b = floor_div(rem, a);
      if (!has_hi || b < hi) hi = b;
      has_hi = true;
    } else {
      Integer b = ceil_div(rem, a);
      if (!has_lo || b > lo) lo = b;
      has_lo = true;
    }
  }
  if (!has_lo || !has_hi) throw DomainError("lattice enumeration: unbounded coordinate");
  if (lo > hi) return;
  if (visit(level, lo, hi, x)) return;
  for (Integer v = lo; v <= hi; ++v) {
    x[level] = v;
    walk_exact(level + 1, x, visit);
  }
}

void LatticeEnumerator::for_each(const std::function<void(const LatticePoint&)>& visit) const {
  if (empty_) return;
  if (fast_) {
    LatticePoint x(dim_, 0);
    auto step = [&](std::size_t level, std::int64_t lo, std::int64_t hi, LatticePoint& pt) {
      if (level + 1 < dim_) return false;
      for (std::int64_t v = lo; v <= hi; ++v) {
        pt[level] = v;
        visit(pt);
      }
      return true;
    };
    walk_fast(0, x, step);
    return;
  }
  std::vector<Integer> x(dim_, Integer(0));
  auto step = [&](std::size_t level, const Integer& lo, const Integer& hi, std::vector<Integer>& pt) {
    if (level + 1 < dim_) return false;
    for (Integer v = lo; v <= hi; ++v) {
      pt[level] = v;
      LatticePoint out;
      for (const auto& z : pt) out.push_back(to_int64(z));
      visit(out);
    }
    return true;
  };
  walk_exact(0, x, step);
}

std::uint64_t LatticeEnumerator::count() const {
  if (empty_) return 0;
  std::uint64_t total = 0;
  if (fast_) {
    LatticePoint x(dim_, 0);
    auto step = [&](std::size_t level, std::int64_t lo, std::int64_t hi, LatticePoint&) {
      if (level + 1 < dim_) return false;
      total += static_cast<std::uint64_t>(hi - lo + 1);
      return true;
    };
    walk_fast(0, x, step);
    return total;
  }
  std::vector<Integer> x(dim_, Integer(0));
  auto step = [&](std::size_t level, const Integer& lo, const Integer& hi, std::vector<Integer>&) {
    if (level + 1 < dim_) return false;
    Integer span = hi - lo + 1;
    total += static_cast<std::uint64_t>(to_int64(span));
    return true;
  };
  walk_exact(0, x, step);
  return total;
}

LatticePointSet LatticeEnumerator::points() const {
  LatticePointSet out;
  for_each([&](const LatticePoint& p) { out.insert(out.end(), p); });
  return out;
}

LatticePointSet lattice_points(const Polytope& p) { return LatticeEnumerator(p).points(); }

std::uint64_t count_lattice_points(const Polytope& p) { return LatticeEnumerator(p).count(); }

}  // namespace flagpoly
