#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace flagpoly {

/// Position (i, j) of the triangular coordinate table, i, j >= 1, i + j <= n,
/// and its flat index k in 1..d. Coordinates are listed column by column
/// from the right: (a_1, ..., a_d) = (u^1_{n-1}; u^2_{n-2}, u^1_{n-2}; ...; u^{n-1}_1, ..., u^1_1).
struct TableIndex {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const TableIndex&, const TableIndex&) = default;
};

/// d = n(n-1)/2.
std::size_t table_dim(std::size_t n);

TableIndex index_of(std::size_t n, std::size_t k);
std::size_t flat_of(std::size_t n, std::size_t i, std::size_t j);

/// "u^i_j" style labels in flat order.
std::vector<std::string> coordinate_names(std::size_t n, const std::string& letter = "u");

/// 0-based coordinates forced to vanish on the k-th face: those with flat
/// index <= k, i.e. m > j, or m = j and l >= i.
std::vector<std::size_t> face_zero_set(std::size_t n, std::size_t k);

}  // namespace flagpoly
