#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagpoly/rational.hpp"
#include "flagpoly/ratmatrix.hpp"

namespace flagpoly {

/// Exponent vector over y_1..y_d (0-based storage: exponents[0] is y_1).
struct Monomial {
  std::vector<std::uint32_t> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

  std::size_t nvars() const { return exponents.size(); }
  std::uint32_t degree() const;
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Lexicographic order with y_1 most significant: a > b iff the first
/// differing exponent is larger in a. Throws UsageError on length mismatch.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

Monomial operator*(const Monomial& a, const Monomial& b);
/// Requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);

struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) < 0; }
};

LatticePoint to_lattice_point(const Monomial& m);

/// Multivariate polynomial over Q in a fixed number of variables.
/// Terms are kept sorted in ascending lex order, so the lowest term is the
/// first entry and the leading (lex-largest) term the last.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, LexLess>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  /// y_{index+1}, i.e. index is 0-based.
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c);

  /// Parses expressions such as "y1*y2^2 - 3/2*y3 + 1" with variables y1..y<nvars>.
  static Polynomial parse(std::size_t nvars, std::string_view text);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of m (zero when absent).
  Rational coefficient(const Monomial& m) const;

  /// Lex-smallest monomial of the support. Throws DomainError on zero.
  const Monomial& lowest_monomial() const;
  /// Lex-largest monomial of the support. Throws DomainError on zero.
  const Monomial& leading_monomial() const;

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }

  friend bool operator==(const Polynomial& f, const Polynomial& g);

  Rational evaluate(std::span<const Rational> point) const;

  /// Substitutes y_k -> factors[k] * y_k.
  Polynomial rescaled(std::span<const Rational> factors) const;

  /// Substitutes y_k -> 0 for every listed 0-based index.
  Polynomial with_zeros(std::span<const std::size_t> indices) const;

  /// Renames y_k -> y_{perm[k]} (0-based), keeping the variable count.
  Polynomial relabeled(std::span<const std::size_t> perm) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::size_t nvars_;
  TermMap terms_;
};

/// v(f): exponent vector of the lex-lowest term. Throws DomainError for f == 0.
Monomial lowest_term(const Polynomial& f);

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// Quotient f / g when g divides f exactly; throws DomainError otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Dense matrix of polynomials sharing one variable count.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Polynomial> row(std::size_t r) const;
  void append_row(const std::vector<Polynomial>& row);

  RatMatrix evaluate(std::span<const Rational> point) const;
  PolyMatrix rescaled(std::span<const Rational> factors) const;
  PolyMatrix with_zeros(std::span<const std::size_t> indices) const;

  /// Rows from a nested list of polynomial strings in y1..y<nvars>.
  static PolyMatrix parse(std::size_t nvars, const std::vector<std::vector<std::string>>& rows);

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Polynomial> data_;
};

/// Determinant by Laplace expansion along the first row.
Polynomial determinant_cofactor(const PolyMatrix& m);

/// Fraction-free (Bareiss) determinant with row pivoting; every division is exact.
Polynomial determinant_bareiss(const PolyMatrix& m);

/// Minor on the given row and column selections (0-based, any order). Uses
/// cofactor expansion up to size 4 and Bareiss elimination above that.
Polynomial poly_minor(const PolyMatrix& m, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols);

}  // namespace flagpoly
