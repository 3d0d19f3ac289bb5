#pragma once

#include <cstdint>
#include <functional>
#include <set>

#include "flagpoly/polytope.hpp"
#include "flagpoly/rational.hpp"

namespace flagpoly {

using LatticePointSet = std::set<LatticePoint>;

/// Integer points of P by backtracking over x_1, x_2, ... in order. The bounds
/// for x_r given x_1..x_{r-1} come from an exact projection of P onto the
/// first r coordinates (Fourier-Motzkin with LP redundancy pruning), so every
/// prefix that is accepted extends to at least one real point of P.
class LatticeEnumerator {
 public:
  explicit LatticeEnumerator(const Polytope& p);

  std::size_t dim() const { return dim_; }

  /// Visits every integer point in lexicographic order.
  void for_each(const std::function<void(const LatticePoint&)>& visit) const;

  /// Number of integer points; the last coordinate is counted without
  /// materializing points.
  std::uint64_t count() const;

  LatticePointSet points() const;

  /// Inequalities (integer coefficients) bounding x_{level+1} in terms of the
  /// earlier coordinates. Exposed for tests and benchmarks.
  std::size_t level_size(std::size_t level) const { return levels_.at(level).size(); }

 private:
  struct Row {
    std::vector<Integer> coeffs;  // length level+1
    Integer rhs;
  };
  struct FastRow {
    std::vector<std::int64_t> coeffs;
    std::int64_t rhs;
  };

  template <typename Visit>
  void walk_fast(std::size_t level, LatticePoint& x, Visit& visit) const;
  template <typename Visit>
  void walk_exact(std::size_t level, std::vector<Integer>& x, Visit& visit) const;

  std::size_t dim_;
  bool empty_ = false;
  bool fast_ = false;
  std::vector<std::vector<Row>> levels_;
  std::vector<std::vector<FastRow>> fast_levels_;
};

LatticePointSet lattice_points(const Polytope& p);
std::uint64_t count_lattice_points(const Polytope& p);

/// Coordinatewise integer bounding box [lo_k, hi_k] of a nonempty polytope,
/// from exact LP optima rounded inwards.
struct BoundingBox {
  std::vector<Integer> lo, hi;
};
BoundingBox integer_bounding_box(const Polytope& p);

}  // namespace flagpoly
