#include "flagpoly/interpolate.hpp"

#include <sstream>

#include "flagpoly/errors.hpp"

namespace flagpoly {

UnivariatePolynomial::UnivariatePolynomial(RatVector coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string UnivariatePolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    Rational mag = abs(c);
    if (k == 0 || mag != 1) out << flagpoly::to_string(mag);
    if (k > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

UnivariatePolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        throw UsageError("interpolate: duplicate abscissa " + to_string(points[i].first));
      }
    }
  }
  RatVector result(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // Basis polynomial prod_{j != i} (t - t_j) / (t_i - t_j), built by repeated multiplication.
    RatVector basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      RatVector next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * points[j].first;
      }
      basis = std::move(next);
      denom *= points[i].first - points[j].first;
    }
    const Rational scale = points[i].second / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * scale;
  }
  return UnivariatePolynomial(std::move(result));
}

}  // namespace flagpoly
