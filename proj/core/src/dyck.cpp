#include "flagpoly/dyck.hpp"

#include "flagpoly/errors.hpp"
#include "flagpoly/table_index.hpp"

namespace flagpoly {
namespace {

void extend(std::size_t a, std::size_t b, std::size_t target_a, std::size_t target_b, DyckPath& current,
            std::vector<DyckPath>& out) {
  current.roots.emplace_back(a, b);
  if (a == target_a && b == target_b) {
    out.push_back(current);
  } else {
    if (b < target_b) extend(a, b + 1, target_a, target_b, current, out);
    if (a < target_a && a + 1 < b) extend(a + 1, b, target_a, target_b, current, out);
  }
  current.roots.pop_back();
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> DyckPath::entries() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [a, b] : roots) out.emplace_back(b - a, a);
  return out;
}

std::vector<std::size_t> DyckPath::coordinates(std::size_t n) const {
  std::vector<std::size_t> out;
  for (auto [l, m] : entries()) out.push_back(flat_of(n, l, m) - 1);
  return out;
}

std::string DyckPath::to_string() const {
  std::string out;
  for (auto [l, m] : entries()) {
    if (!out.empty()) out += " + ";
    out += "u^" + std::to_string(l) + "_" + std::to_string(m);
  }
  return out;
}

std::vector<DyckPath> dyck_paths(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || i >= j || j > n) {
    throw UsageError("Dyck path endpoints need 1 <= i < j <= n, got i=" + std::to_string(i) +
                     " j=" + std::to_string(j));
  }
  std::vector<DyckPath> out;
  DyckPath current{i, j, {}};
  extend(i, i + 1, j - 1, j, current, out);
  return out;
}

std::vector<DyckPath> all_dyck_paths(std::size_t n) {
  std::vector<DyckPath> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      auto paths = dyck_paths(n, i, j);
      out.insert(out.end(), paths.begin(), paths.end());
    }
  }
  return out;
}

}  // namespace flagpoly
