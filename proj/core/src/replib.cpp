#include "flagpoly/replib.hpp"

#include "flagpoly/errors.hpp"
#include "flagpoly/lattice.hpp"

namespace flagpoly {

Integer weyl_dim(const Weight& lambda) {
  Rational product = 1;
  const std::size_t n = lambda.n();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      product *= make_rational(Integer(lambda(i) - lambda(j) + static_cast<long>(j - i)), Integer(static_cast<long>(j - i)));
    }
  }
  if (!is_integer(product)) throw DomainError("Weyl dimension is not an integer: " + to_string(product));
  return product.get_num();
}

std::uint64_t brute_count(const Polytope& p) {
  if (p.is_empty()) return 0;
  const std::size_t d = p.dim();
  BoundingBox box = integer_bounding_box(p);
  Integer volume = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (box.hi[k] < box.lo[k]) return 0;
    volume *= box.hi[k] - box.lo[k] + 1;
    if (volume > Integer(std::to_string(kMaxBruteVolume))) {
      throw UnsupportedSize("brute-force box holds more than " + std::to_string(kMaxBruteVolume) + " points");
    }
  }

  // Integer rows, so the membership test runs in machine words.
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
  for (const auto& h : p.halfspaces()) {
    Halfspace n = normalized(h);
    std::vector<std::int64_t> r;
    for (const auto& c : n.coeffs) r.push_back(to_int64(c.get_num()));
    rows.push_back(std::move(r));
    rhs.push_back(to_int64(floor_of(n.rhs)));
  }
  std::vector<std::int64_t> lo(d), hi(d), x(d);
  for (std::size_t k = 0; k < d; ++k) {
    lo[k] = to_int64(box.lo[k]);
    hi[k] = to_int64(box.hi[k]);
  }
  x = lo;
  std::uint64_t count = 0;
  while (true) {
    bool inside = true;
    for (std::size_t r = 0; r < rows.size() && inside; ++r) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) s += rows[r][k] * x[k];
      inside = s <= rhs[r];
    }
    if (inside) ++count;
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (x[k] < hi[k]) {
        ++x[k];
        break;
      }
      x[k] = lo[k];
      if (k == 0) return count;
    }
  }
}

}  // namespace flagpoly
