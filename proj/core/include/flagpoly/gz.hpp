#pragma once

#include <cstddef>
#include <span>

#include "flagpoly/lattice.hpp"
#include "flagpoly/polytope.hpp"
#include "flagpoly/report.hpp"
#include "flagpoly/weight.hpp"

namespace flagpoly {

/// Gelfand-Zetlin polytope in the flat coordinate order of the u-table:
/// coordinate k holds z^i_j for (i, j) = index_of(n, k). Interlacing
/// z^{l-1}_m >= z^l_m >= z^{l-1}_{m+1} with the top row z^0 = lambda.
Polytope gz_polytope(const Weight& lambda);
Polytope gz_polytope(std::span<const Rational> lambda);

/// G_k(lambda): GZ(lambda) with z^l_m = z^{l-1}_{m+1} on the first k flat positions.
Polytope gz_face(const Weight& lambda, std::size_t k);
Polytope gz_face(std::span<const Rational> lambda, std::size_t k);

/// z(t) for (i, j) = index_of(n, k): z^l_m = t - lambda_{l+m} when m > j,
/// j + 2 <= l + m <= i + j and lambda_{l+m} <= t; zero elsewhere.
/// Throws UsageError for t outside [lambda_{i+j}, lambda_j].
RatVector shift_at(const Weight& lambda, std::size_t k, const Rational& t);

/// For integer t in [lambda_{i+j}, lambda_j] compares G_{k-1}(lambda) cut at
/// z^i_j = t with G_k(mu(t)) moved by -z(t), then checks the hull of all
/// moved faces against G_{k-1}(lambda).
///
/// The subtraction is deliberate: adding z(t) moves G_k(mu(t)) off the slice
/// already for n = 3, k = 2, where G_k(mu(t)) has z^1_2 = t while the slice
/// has z^1_2 = lambda_3.
Report check_slice_lemma_gz(const Weight& lambda, std::size_t k);

/// The same slice identity at the non-integer points lo + s/denominator.
/// Informational: the identity is only claimed at integers.
Report probe_slice_lemma_gz(const Weight& lambda, std::size_t k, long denominator = 2);

/// Integer GZ patterns generated row by row; each row ranges over the
/// interlacing box of the row above.
LatticePointSet gz_lattice_points_fast(const Weight& lambda);
std::uint64_t gz_count_fast(const Weight& lambda);

}  // namespace flagpoly
