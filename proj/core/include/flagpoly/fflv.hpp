#pragma once

#include <cstddef>
#include <span>

#include "flagpoly/polytope.hpp"
#include "flagpoly/report.hpp"
#include "flagpoly/table_index.hpp"
#include "flagpoly/weight.hpp"

namespace flagpoly {

/// u >= 0 on every table entry, plus one inequality per Dyck path:
/// the sum of entries along a path from lambda_i to lambda_j is <= lambda_i - lambda_j.
Polytope fflv_polytope(const Weight& lambda);
/// Same construction for a weakly decreasing rational tuple.
Polytope fflv_polytope(std::span<const Rational> lambda);

/// F_k(lambda): FFLV(lambda) with the first k flat coordinates set to zero
/// (F_0 = FFLV). Kept in the ambient space.
Polytope fflv_face(const Weight& lambda, std::size_t k);
Polytope fflv_face(std::span<const Rational> lambda, std::size_t k);

/// mu(t) for table position (i, j) = index_of(n, k): mu_l = max(lambda_l, t)
/// for j < l <= i + j, mu_l = lambda_l otherwise, t in [lambda_{i+j}, lambda_j].
struct WeightPath {
  Weight base;
  TableIndex index;
  long lo = 0;  // lambda_{i+j}
  long hi = 0;  // lambda_j
};

WeightPath mu_path(const Weight& lambda, std::size_t k);
/// Throws UsageError when t lies outside [lo, hi].
Weight mu_at(const WeightPath& path, long t);
RatVector mu_at(const WeightPath& path, const Rational& t);

/// For every integer t in the path domain, compares the slice of F_{k-1}(lambda)
/// at a_k = t - lambda_{i+j} with (t - lambda_{i+j}) e_k + F_k(mu(t)), then
/// checks that the hull of all these translated faces is F_{k-1}(lambda).
Report check_slice_lemma_fflv(const Weight& lambda, std::size_t k);

}  // namespace flagpoly
