#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagpoly/polynomial.hpp"
#include "flagpoly/report.hpp"
#include "flagpoly/weight.hpp"

namespace flagpoly {

/// Reduced word (s_1)(s_2 s_1)(s_3 s_2 s_1)...(s_{n-1}...s_1) of the longest
/// element; letter k of the word belongs to table position index_of(n, k).
struct Word {
  std::size_t n = 0;
  std::vector<std::size_t> letters;
};

Word word(std::size_t n);

/// Permutation as the images of 1..n (images[i-1] = w(i)).
using Permutation = std::vector<std::size_t>;

/// w_k: product of the letters after the first k, composed left to right as
/// maps (the leftmost letter is applied last).
Permutation terminal_perm(std::size_t n, std::size_t k);

/// Bases of the subspaces V^i_j in the cell coordinates y_1..y_d, where
/// (y_1, ..., y_d) = (x^1_{n-1}; x^2_{n-2}, x^1_{n-2}; ...; x^{n-1}_1, ..., x^1_1).
/// V^i_j is an i x n polynomial matrix; its rows span a subspace of
/// F^{n-j+1} = <e_1, ..., e_{n-j+1}> and carry an identity block in
/// columns n-j-i+2 .. n-j+1. M^i = V^i_1.
class FlagConfig {
 public:
  explicit FlagConfig(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t nvars() const { return d_; }
  const PolyMatrix& subspace(std::size_t i, std::size_t j) const;
  PolyMatrix& subspace(std::size_t i, std::size_t j);
  const PolyMatrix& m(std::size_t i) const { return subspace(i, 1); }

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<PolyMatrix> spaces_;  // by flat index - 1
};

/// Builds every V^i_j in word order. With A = V^{i-1}_{j+1}, z the last basis
/// row of V^{i+1}_j (e_{n-j+1} when i + j = n) and w the first basis row of
/// V^i_{j+1} (e_1 when i + j = n):
///   V^i_j = A + < z + (-1)^{i-1} y_k w >.
/// The line z + t w is the pencil between V^i_j(0) and V^i_j(infinity) = V^i_{j+1}
/// modulo A, and y_k is its affine coordinate.
FlagConfig build_config(std::size_t n);

/// Random rational points with numerators in [-1000, 1000] and denominators in
/// [1, 1000]; degenerate points are redrawn up to 5 times per trial.
struct GenericSampler {
  explicit GenericSampler(std::uint64_t seed);
  RatVector draw(std::size_t nvars);

 private:
  std::uint64_t state_;
  std::uint64_t next();
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr int kGenericRetries = 5;

/// At `trials` random points, checks V^i_j = F^{n-j+1} cap M^{i+j-1} for every (i, j).
Report check_intersection_property(const FlagConfig& cfg, int trials, std::uint64_t seed = kDefaultSeed);

/// Incidence V^{i-1}_{j+1} in V^i_j and V^i_j, V^i_{j+1} in V^{i+1}_j, tested at
/// d + 1 random points, plus the origin condition M^i = <e_{n-i+1}, ..., e_n> at y = 0.
Report check_incidence(const FlagConfig& cfg, std::uint64_t seed = kDefaultSeed);

/// Whether `expected` equals `actual` after substituting y_k -> c_k y_k for
/// some nonzero rationals c_k. Both matrices must be in the same block form
/// (identical identity columns). On failure `why` explains the first mismatch.
bool equal_up_to_scaling(const PolyMatrix& actual, const PolyMatrix& expected, std::string* why = nullptr,
                         RatVector* factors = nullptr);

/// Searches variable relabelings y_k -> y_{perm[k]} combined with scaling that
/// turn `actual` into `expected`. Diagnostic only; d <= 8.
std::optional<std::vector<std::size_t>> find_relabeling(const PolyMatrix& actual, const PolyMatrix& expected);

struct SectionBasis {
  std::string case_id;
  Weight lambda;
  std::vector<Polynomial> sections;
};

/// Catalog: gl3_210, g24_1100, g36_111000, g36_display and fund_<n>_<i>
/// (also written fund(n,i)). Throws UsageError for unknown ids.
SectionBasis sections_for(const std::string& case_id);

/// All i x i column minors of an i x n matrix, columns in lexicographic order.
std::vector<Polynomial> maximal_minors(const PolyMatrix& m);

/// Canonical spelling of a catalog id ("fund(3,1)" -> "fund_3_1").
std::string canonical_case_id(const std::string& case_id);

}  // namespace flagpoly
