#pragma once

#include <vector>

#include "flagpoly/rational.hpp"

namespace flagpoly {

using IntRow = std::vector<Integer>;

/// Extreme rays of the pointed polyhedral cone {y : row . y <= 0 for every row},
/// each scaled to a primitive integer vector. Rows are processed in input
/// order (incremental double description with the combinatorial adjacency
/// test). Throws DomainError when the rows do not span the ambient space,
/// i.e. the cone is not pointed.
std::vector<IntRow> extreme_rays(const std::vector<IntRow>& rows, std::size_t dim);

/// Integer multiple of v with coprime entries (zero stays zero).
IntRow primitive(const RatVector& v);
IntRow primitive(IntRow v);

}  // namespace flagpoly
