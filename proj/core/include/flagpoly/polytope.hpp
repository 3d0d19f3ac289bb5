#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "flagpoly/lp.hpp"
#include "flagpoly/rational.hpp"
#include "flagpoly/ratmatrix.hpp"

namespace flagpoly {

/// coeffs . x <= rhs
struct Halfspace {
  RatVector coeffs;
  Rational rhs;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Positive rescaling to coprime integer coefficients (the rhs follows).
/// Throws UsageError when every coefficient is zero.
Halfspace normalized(const Halfspace& h);

/// Rescaling for hyperplanes coeffs . x = rhs: coprime integers with a
/// positive first nonzero coefficient.
Halfspace normalized_equation(const Halfspace& h);

/// Total order used to list halfspaces canonically.
bool canonical_less(const Halfspace& a, const Halfspace& b);

/// Renders "x1 + 2*x3 <= 5" using the given coordinate names (or x1..xd).
std::string format_halfspace(const Halfspace& h, const std::vector<std::string>& names = {},
                             const char* relation = "<=");

/// Bounded rational H-polytope {x in R^dim : h.coeffs . x <= h.rhs for all h}.
/// Boundedness is verified on construction by maximizing +/- each coordinate;
/// the empty set is a valid (bounded) polytope.
class Polytope {
 public:
  Polytope(std::size_t dim, std::vector<Halfspace> halfspaces);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  RatMatrix constraint_matrix() const;
  RatVector constraint_rhs() const;

  LpResult maximize(const RatVector& objective) const;
  bool is_empty() const;

  /// Halfspaces normalized, deduplicated and sorted; same point set.
  Polytope canonical() const;

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
};

bool contains(const Polytope& p, std::span<const Rational> x);
bool contains(const Polytope& p, const std::vector<std::int64_t>& x);

/// P subset of Q, certified by maximizing every halfspace functional of Q over P.
bool is_subset(const Polytope& p, const Polytope& q);

/// Set equality by double containment.
bool equal(const Polytope& p, const Polytope& q);

/// Affine hull {x : equations} with equations in reduced echelon form
/// (normalized). `dimension` is -1 for the empty polytope.
struct AffineHull {
  std::vector<Halfspace> equations;
  int dimension = -1;
};

/// Detects implicit equalities by minimizing each halfspace functional.
AffineHull affine_hull(const Polytope& p);

/// Minimal description inside the affine hull: the hull equations plus one
/// canonical inequality per facet (reduced against the equations, so the
/// result is independent of input order).
struct FacetDescription {
  std::vector<Halfspace> equations;
  std::vector<Halfspace> facets;
  int dimension = -1;
};

/// Throws DomainError for the empty polytope.
FacetDescription irredundant(const Polytope& p);

/// Polytope rebuilt from a facet description (equations become halfspace pairs).
Polytope from_facets(std::size_t dim, const FacetDescription& f);

/// Largest ambient dimension accepted by vertex enumeration and hull recovery.
inline constexpr std::size_t kMaxVertexDim = 8;

/// Vertex set by double description, sorted lexicographically.
/// Throws UnsupportedSize above kMaxVertexDim.
std::vector<RatVector> vertices(const Polytope& p);

/// H-representation of conv(points) in R^dim. Throws DomainError for no points.
Polytope convex_hull(std::size_t dim, const std::vector<RatVector>& points);

/// rhs scaled by m (m > 0).
Polytope dilate(const Polytope& p, long m);
Polytope translate(const Polytope& p, std::span<const Rational> shift);

/// P intersected with {x_coord = value}, kept in the ambient space.
Polytope slice(const Polytope& p, std::size_t coord, const Rational& value);

/// P intersected with {x_k = 0 for k in zeros}, in the ambient space.
Polytope with_zeros(const Polytope& p, std::span<const std::size_t> zeros);

/// P intersected with {x_k = 0 for k in zeros}, expressed in the remaining
/// coordinates (in increasing order).
Polytope project_zeros(const Polytope& p, std::span<const std::size_t> zeros);

Polytope intersect(const Polytope& p, const Polytope& q);

/// Hull of pairwise vertex sums.
Polytope minkowski_sum(const Polytope& p, const Polytope& q);

}  // namespace flagpoly
