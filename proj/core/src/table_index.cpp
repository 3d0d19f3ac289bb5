#include "flagpoly/table_index.hpp"

#include "flagpoly/errors.hpp"

namespace flagpoly {

std::size_t table_dim(std::size_t n) {
  if (n < 1) throw UsageError("n must be positive");
  return n * (n - 1) / 2;
}

TableIndex index_of(std::size_t n, std::size_t k) {
  const std::size_t d = table_dim(n);
  if (k < 1 || k > d) {
    throw UsageError("flat index " + std::to_string(k) + " outside 1.." + std::to_string(d));
  }
  std::size_t g = 1;
  while (g * (g + 1) / 2 < k) ++g;
  const std::size_t o = k - g * (g - 1) / 2;
  return TableIndex{n, k, g - o + 1, n - g};
}

std::size_t flat_of(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i + j > n) {
    throw UsageError("table position (" + std::to_string(i) + "," + std::to_string(j) + ") invalid for n=" +
                     std::to_string(n));
  }
  const std::size_t g = n - j;
  return g * (g - 1) / 2 + (g - i + 1);
}

std::vector<std::string> coordinate_names(std::size_t n, const std::string& letter) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= table_dim(n); ++k) {
    TableIndex t = index_of(n, k);
    out.push_back(letter + "^" + std::to_string(t.i) + "_" + std::to_string(t.j));
  }
  return out;
}

std::vector<std::size_t> face_zero_set(std::size_t n, std::size_t k) {
  if (k > table_dim(n)) throw UsageError("face index " + std::to_string(k) + " out of range");
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < k; ++c) out.push_back(c);
  return out;
}

}  // namespace flagpoly
