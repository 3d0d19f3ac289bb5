#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace flagpoly {

/// Monotone path of positive roots (a, b), a < b, from (i, i+1) to (j-1, j),
/// each step raising a or b by one. Root (a, b) is table entry u^{b-a}_a.
struct DyckPath {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<std::size_t, std::size_t>> roots;

  /// Table entries (l, m) along the path.
  std::vector<std::pair<std::size_t, std::size_t>> entries() const;
  /// 0-based flat coordinates along the path for the given n.
  std::vector<std::size_t> coordinates(std::size_t n) const;
  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

/// All paths for fixed endpoints 1 <= i < j <= n, ordered by preferring the
/// b-step (b+1) over the a-step at each branch.
std::vector<DyckPath> dyck_paths(std::size_t n, std::size_t i, std::size_t j);

/// Paths for every pair i < j, grouped by i then j.
std::vector<DyckPath> all_dyck_paths(std::size_t n);

}  // namespace flagpoly
