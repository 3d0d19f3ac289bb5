#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagpoly/rational.hpp"

namespace flagpoly {

/// Univariate polynomial with rational coefficients, lowest degree first.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(RatVector coeffs);

  const RatVector& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational operator()(const Rational& t) const;
  std::string to_string(char var = 't') const;

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  RatVector coeffs_;  // trailing zeros trimmed
};

/// Lagrange interpolation through (t, value) pairs with distinct abscissae.
/// The result has degree < points.size(). Duplicate abscissae -> UsageError.
UnivariatePolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace flagpoly
