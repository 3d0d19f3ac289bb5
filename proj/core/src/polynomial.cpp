#include "flagpoly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "flagpoly/errors.hpp"

namespace flagpoly {

std::uint32_t Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw UsageError("monomials over different variable counts");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw UsageError("lex_compare: exponent vectors of length " + std::to_string(a.nvars()) +
                     " and " + std::to_string(b.nvars()));
  }
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] <=> b.exponents[i];
  }
  return std::strong_ordering::equal;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw UsageError("monomials over different variable counts");
  Monomial m(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) m.exponents[i] = a.exponents[i] + b.exponents[i];
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw DomainError("monomial division is not exact");
  Monomial m(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) m.exponents[i] = a.exponents[i] - b.exponents[i];
  return m;
}

LatticePoint to_lattice_point(const Monomial& m) {
  return LatticePoint(m.exponents.begin(), m.exponents.end());
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw UsageError("variable index out of range");
  Monomial m(nvars);
  m.exponents[index] = 1;
  return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw UsageError("term has the wrong number of variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::lowest_monomial() const {
  if (terms_.empty()) throw DomainError("valuation of the zero polynomial");
  return terms_.begin()->first;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  if (g.nvars_ != nvars_) throw UsageError("adding polynomials over different variable counts");
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  if (g.nvars_ != nvars_) throw UsageError("subtracting polynomials over different variable counts");
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.nvars_ != g.nvars_) throw UsageError("multiplying polynomials over different variable counts");
  Polynomial p(f.nvars_);
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) p.add_term(mf * mg, cf * cg);
  }
  return p;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw UsageError("evaluation point has the wrong dimension");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_ && sgn(term) != 0; ++i) {
      for (std::uint32_t e = 0; e < m.exponents[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::rescaled(std::span<const Rational> factors) const {
  if (factors.size() != nvars_) throw UsageError("rescaling vector has the wrong dimension");
  Polynomial p(nvars_);
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t e = 0; e < m.exponents[i]; ++e) coeff *= factors[i];
    }
    p.add_term(m, coeff);
  }
  return p;
}

Polynomial Polynomial::with_zeros(std::span<const std::size_t> indices) const {
  Polynomial p(nvars_);
  for (const auto& [m, c] : terms_) {
    bool vanishes = std::any_of(indices.begin(), indices.end(), [&](std::size_t k) {
      if (k >= nvars_) throw UsageError("zeroed variable index out of range");
      return m.exponents[k] > 0;
    });
    if (!vanishes) p.add_term(m, c);
  }
  return p;
}

Polynomial Polynomial::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != nvars_) throw UsageError("relabeling has the wrong length");
  Polynomial p(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (perm[i] >= nvars_) throw UsageError("relabeling target out of range");
      r.exponents[perm[i]] += m.exponents[i];
    }
    p.add_term(r, c);
  }
  return p;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = m.degree() == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      out << flagpoly::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (wrote) out << "*";
      out << "y" << (i + 1);
      if (m.exponents[i] > 1) out << "^" << m.exponents[i];
      wrote = true;
    }
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::size_t nvars, std::string_view text) : nvars_(nvars), text_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse polynomial '" + std::string(text_) + "': " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Polynomial expr() {
    Polynomial p(nvars_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    p = term();
    if (negate) p = -p;
    for (;;) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      Integer e = number();
      Polynomial r = Polynomial::constant(nvars_, 1);
      for (Integer i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (accept('(')) {
      Polynomial p = expr();
      if (!accept(')')) fail("missing ')'");
      return p;
    }
    if (accept('-')) return -primary();
    if (pos_ < text_.size() && text_[pos_] == 'y') {
      ++pos_;
      Integer idx = number();
      if (idx < 1 || idx > static_cast<long>(nvars_)) fail("variable index out of range");
      return Polynomial::variable(nvars_, idx.get_ui() - 1);
    }
    Integer num = number();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      return Polynomial::constant(nvars_, make_rational(num, number()));
    }
    return Polynomial::constant(nvars_, Rational(num));
  }

  std::size_t nvars_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::size_t nvars, std::string_view text) {
  return Parser(nvars, text).run();
}

Monomial lowest_term(const Polynomial& f) { return f.lowest_monomial(); }

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.nvars() != g.nvars()) throw UsageError("dividing polynomials over different variable counts");
  const Monomial& lead_g = g.leading_monomial();
  const Rational lead_c = g.coefficient(lead_g);
  Polynomial rest = f;
  Polynomial quotient(f.nvars());
  while (!rest.is_zero()) {
    const Monomial& lead = rest.leading_monomial();
    if (!lead_g.divides(lead)) throw DomainError("polynomial division is not exact");
    Polynomial t = Polynomial::monomial(lead / lead_g, rest.coefficient(lead) / lead_c);
    quotient += t;
    rest -= t * g;
  }
  return quotient;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Polynomial(nvars)) {}

std::vector<Polynomial> PolyMatrix::row(std::size_t r) const {
  return std::vector<Polynomial>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void PolyMatrix::append_row(const std::vector<Polynomial>& row) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = row.size();
    if (!row.empty()) nvars_ = row.front().nvars();
  }
  if (row.size() != cols_) throw UsageError("row length does not match matrix width");
  for (const auto& p : row) {
    if (p.nvars() != nvars_) throw UsageError("matrix entries over different variable counts");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RatMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  RatMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).evaluate(point);
  }
  return m;
}

PolyMatrix PolyMatrix::rescaled(std::span<const Rational> factors) const {
  PolyMatrix m = *this;
  for (auto& p : m.data_) p = p.rescaled(factors);
  return m;
}

PolyMatrix PolyMatrix::with_zeros(std::span<const std::size_t> indices) const {
  PolyMatrix m = *this;
  for (auto& p : m.data_) p = p.with_zeros(indices);
  return m;
}

PolyMatrix PolyMatrix::parse(std::size_t nvars, const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix m(0, rows.empty() ? 0 : rows.front().size(), nvars);
  for (const auto& r : rows) {
    std::vector<Polynomial> parsed;
    for (const auto& s : r) parsed.push_back(Polynomial::parse(nvars, s));
    m.append_row(parsed);
  }
  return m;
}

Polynomial determinant_cofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.nvars(), 1);
  if (n == 1) return m(0, 0);
  Polynomial det(m.nvars());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PolyMatrix sub(n - 1, n - 1, m.nvars());
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        sub(r - 1, cc++) = m(r, k);
      }
    }
    Polynomial term = m(0, c) * determinant_cofactor(sub);
    if (c % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

Polynomial determinant_bareiss(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.nvars(), 1);
  PolyMatrix a = m;
  Polynomial prev = Polynomial::constant(m.nvars(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return Polynomial(m.nvars());
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = exact_divide(num, prev);
      }
      a(i, k) = Polynomial(m.nvars());
    }
    prev = a(k, k);
  }
  Polynomial det = a(n - 1, n - 1);
  return negate ? -det : det;
}

Polynomial poly_minor(const PolyMatrix& m, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw UsageError("minor needs a square selection");
  PolyMatrix sub(rows.size(), cols.size(), m.nvars());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] >= m.rows()) throw UsageError("minor row index out of range");
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] >= m.cols()) throw UsageError("minor column index out of range");
      sub(r, c) = m(rows[r], cols[c]);
    }
  }
  return rows.size() <= 4 ? determinant_cofactor(sub) : determinant_bareiss(sub);
}

}  // namespace flagpoly
