#include "flagpoly/double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "flagpoly/errors.hpp"
#include "flagpoly/ratmatrix.hpp"

namespace flagpoly {
namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntRow v;
  Bits zeros;
};

Integer dot(const IntRow& a, const IntRow& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

}  // namespace

IntRow primitive(IntRow v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

IntRow primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntRow out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  return primitive(std::move(out));
}

std::vector<IntRow> extreme_rays(const std::vector<IntRow>& rows, std::size_t dim) {
  for (const auto& r : rows) {
    if (r.size() != dim) throw UsageError("extreme_rays: row of the wrong length");
  }
  // Greedy choice of dim independent rows for the initial simplicial cone.
  std::vector<std::size_t> initial;
  RatMatrix chosen(0, dim);
  for (std::size_t i = 0; i < rows.size() && initial.size() < dim; ++i) {
    RatVector rv(rows[i].begin(), rows[i].end());
    RatMatrix trial = chosen;
    trial.append_row(rv);
    if (rank(trial) == initial.size() + 1) {
      chosen = std::move(trial);
      initial.push_back(i);
    }
  }
  if (initial.size() < dim) throw DomainError("extreme_rays: cone is not pointed");

  const std::size_t nrows = rows.size();
  std::vector<bool> processed(nrows, false);
  std::vector<Ray> rays;
  // Ray k of the initial cone solves B y = -e_k.
  for (std::size_t k = 0; k < dim; ++k) {
    RatVector rhs(dim, Rational(0));
    rhs[k] = -1;
    auto y = solve_square(chosen, rhs);
    Ray ray{primitive(*y), Bits(nrows)};
    for (std::size_t other = 0; other < dim; ++other) {
      if (other != k) ray.zeros.set(initial[other]);
    }
    rays.push_back(std::move(ray));
  }
  for (auto i : initial) processed[i] = true;

  for (std::size_t h = 0; h < nrows; ++h) {
    if (processed[h]) continue;
    processed[h] = true;
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(rows[h], rays[r].v);
      int sign = sgn(s[r]);
      (sign > 0 ? pos : sign < 0 ? neg : zero).push_back(r);
    }
    if (pos.empty()) {
      for (auto r : zero) rays[r].zeros.set(h);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntRow v(dim);
        const Integer sp = s[p];
        const Integer sq = -s[q];
        for (std::size_t c = 0; c < dim; ++c) v[c] = sp * rays[q].v[c] + sq * rays[p].v[c];
        Ray ray{primitive(std::move(v)), common};
        ray.zeros.set(h);
        next.push_back(std::move(ray));
      }
    }
    for (std::size_t r : neg) next.push_back(std::move(rays[r]));
    for (std::size_t r : zero) {
      rays[r].zeros.set(h);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  std::vector<IntRow> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace flagpoly
