#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flagpoly/rational.hpp"

namespace flagpoly {

/// Dominant integral GL_n weight lambda_1 >= ... >= lambda_n.
class Weight {
 public:
  /// Throws UsageError naming the first violated pair when not dominant,
  /// or when fewer than one entry is given.
  explicit Weight(std::vector<long> entries);

  /// "2,1,0" (spaces allowed).
  static Weight parse(std::string_view text);

  std::size_t n() const { return entries_.size(); }
  /// 1-based: lambda(1) is the largest entry.
  long operator()(std::size_t l) const { return entries_.at(l - 1); }
  const std::vector<long>& entries() const { return entries_; }

  bool is_strict() const;
  Weight scaled(long m) const;
  RatVector to_rational() const;
  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<long> entries_;
};

/// Fundamental weight omega_r of GL_n: r ones followed by zeros.
Weight fundamental_weight(std::size_t n, std::size_t r);

/// All dominant weights with lambda_n = 0 and lambda_1 <= spread.
std::vector<Weight> dominant_weights(std::size_t n, long spread);

}  // namespace flagpoly
