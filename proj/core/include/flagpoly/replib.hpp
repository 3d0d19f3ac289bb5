#pragma once

#include <cstdint>

#include "flagpoly/polytope.hpp"
#include "flagpoly/rational.hpp"
#include "flagpoly/weight.hpp"

namespace flagpoly {

/// Product over i < j of (lambda_i - lambda_j + j - i) / (j - i).
Integer weyl_dim(const Weight& lambda);

/// Largest bounding-box volume brute_count accepts.
inline constexpr std::uint64_t kMaxBruteVolume = 10'000'000;

/// Integer points of P by scanning its integer bounding box and testing every
/// halfspace. Throws UnsupportedSize when the box holds more than
/// kMaxBruteVolume points.
std::uint64_t brute_count(const Polytope& p);

}  // namespace flagpoly
