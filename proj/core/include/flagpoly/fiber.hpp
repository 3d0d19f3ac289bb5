#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "flagpoly/interpolate.hpp"
#include "flagpoly/polytope.hpp"
#include "flagpoly/report.hpp"
#include "flagpoly/weight.hpp"

namespace flagpoly {

/// Slices P(t) x {t} of a polytope fibred over an integer segment. Each slice
/// is stored in the ambient space with the axis coordinate already fixed to
/// axis_value(t).
struct SliceFamily {
  std::size_t dim = 0;
  std::size_t axis = 0;  // 0-based coordinate
  long t0 = 0;
  std::vector<Rational> axis_values;  // one per integer t = t0, t0+1, ...
  std::vector<Polytope> slices;

  long t1() const { return t0 + static_cast<long>(slices.size()) - 1; }
};

/// Slices (t - lambda_{i+j}) e_k + F_k(mu(t)) along a_k.
SliceFamily fflv_family(const Weight& lambda, std::size_t k);
/// Slices G_k(mu(t)) - z(t) along z^i_j = t.
SliceFamily gz_family(const Weight& lambda, std::size_t k);

/// For integer t1 < t2 of equal parity: (P(t1) + P(t2)) / 2 must lie in
/// P((t1 + t2) / 2). Checked on all pairwise vertex midpoints.
Report check_midpoint_convex(const SliceFamily& fam);

/// Hull of all slice vertices. Throws DomainError when the family fails the
/// midpoint test or a cross-section of the hull differs from its slice.
Polytope assemble(const SliceFamily& fam);

struct EhrhartComparison {
  Report report;
  int dimension = -1;
  std::vector<std::uint64_t> fflv_counts;  // index m-1
  std::vector<std::uint64_t> gz_counts;
  std::optional<UnivariatePolynomial> fflv_polynomial;
  std::optional<UnivariatePolynomial> gz_polynomial;
};

/// Counts F_k(m lambda) and G_k(m lambda) for m = 1..max_dilation. When
/// max_dilation >= dim + 1 both Ehrhart polynomials are interpolated from
/// m = 1..dim+1 (with m = 0 giving 1) and compared coefficientwise.
EhrhartComparison compare_ehrhart(const Weight& lambda, std::size_t k, long max_dilation);

}  // namespace flagpoly
