#include "flagpoly/flagcoords.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "flagpoly/errors.hpp"
#include "flagpoly/table_index.hpp"

namespace flagpoly {
namespace {

std::string pos(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

RatMatrix stack(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

bool row_space_contains(const RatMatrix& big, const RatMatrix& small) {
  return rank(stack(big, small)) == rank(big);
}

// Rows c . M with c . M vanishing on columns first_zero.. (0-based).
RatMatrix truncate_intersection(const RatMatrix& m, std::size_t first_zero) {
  const std::size_t n = m.cols();
  if (first_zero >= n) return m;
  RatMatrix t(0, m.rows());
  for (std::size_t c = first_zero; c < n; ++c) {
    RatVector col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
    t.append_row(col);
  }
  RatMatrix out(0, n);
  for (const auto& coeffs : nullspace(t)) {
    RatVector row(n, Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < n; ++c) row[c] += coeffs[r] * m(r, c);
    }
    out.append_row(row);
  }
  return out;
}

std::vector<Polynomial> unit_row(std::size_t n, std::size_t nvars, std::size_t col) {
  std::vector<Polynomial> row(n, Polynomial(nvars));
  row[col] = Polynomial::constant(nvars, Rational(1));
  return row;
}

PolyMatrix relabel_matrix(const PolyMatrix& m, std::span<const std::size_t> perm) {
  PolyMatrix out(m.rows(), m.cols(), m.nvars());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).relabeled(perm);
  }
  return out;
}

bool is_unit_column(const PolyMatrix& m, std::size_t c, std::size_t& row) {
  std::size_t ones = 0;
  const Monomial one(m.nvars());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Polynomial& p = m(r, c);
    if (p.is_zero()) continue;
    if (p.term_count() == 1 && p.terms().begin()->first == one && p.terms().begin()->second == 1) {
      ++ones;
      row = r;
    } else {
      return false;
    }
  }
  return ones == 1;
}

}  // namespace

Word word(std::size_t n) {
  if (n < 2) throw UsageError("word needs n >= 2");
  Word w{n, {}};
  for (std::size_t g = 1; g < n; ++g) {
    for (std::size_t a = g; a >= 1; --a) w.letters.push_back(a);
  }
  return w;
}

Permutation terminal_perm(std::size_t n, std::size_t k) {
  Word w = word(n);
  if (k > w.letters.size()) throw UsageError("terminal_perm: k out of range");
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  // Right-multiply by each letter: p <- p o s_a.
  for (std::size_t idx = k; idx < w.letters.size(); ++idx) {
    const std::size_t a = w.letters[idx];
    std::swap(p[a - 1], p[a]);
  }
  return p;
}

FlagConfig::FlagConfig(std::size_t n) : n_(n), d_(table_dim(n)), spaces_(table_dim(n)) {
  if (n < 2) throw UsageError("flag configuration needs n >= 2");
}

const PolyMatrix& FlagConfig::subspace(std::size_t i, std::size_t j) const {
  return spaces_.at(flat_of(n_, i, j) - 1);
}

PolyMatrix& FlagConfig::subspace(std::size_t i, std::size_t j) { return spaces_.at(flat_of(n_, i, j) - 1); }

FlagConfig build_config(std::size_t n) {
  FlagConfig cfg(n);
  const std::size_t d = cfg.nvars();
  for (std::size_t k = 1; k <= d; ++k) {
    const TableIndex t = index_of(n, k);
    const std::size_t i = t.i, j = t.j;
    PolyMatrix v(0, n, d);
    if (i > 1) {
      const PolyMatrix& a = cfg.subspace(i - 1, j + 1);
      for (std::size_t r = 0; r < a.rows(); ++r) v.append_row(a.row(r));
    }
    std::vector<Polynomial> z =
        i + j == n ? unit_row(n, d, n - j) : cfg.subspace(i + 1, j).row(i);
    std::vector<Polynomial> w = i + j == n ? unit_row(n, d, 0) : cfg.subspace(i, j + 1).row(0);
    Polynomial coord = Polynomial::variable(d, k - 1);
    if (i % 2 == 0) coord = -coord;
    for (std::size_t c = 0; c < n; ++c) z[c] += coord * w[c];
    v.append_row(z);
    cfg.subspace(i, j) = std::move(v);
  }
  return cfg;
}

GenericSampler::GenericSampler(std::uint64_t seed) : state_(seed) {}

std::uint64_t GenericSampler::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RatVector GenericSampler::draw(std::size_t nvars) {
  RatVector out;
  for (std::size_t k = 0; k < nvars; ++k) {
    long num = static_cast<long>(next() % 2001) - 1000;
    long den = static_cast<long>(next() % 1000) + 1;
    out.push_back(make_rational(Integer(num), Integer(den)));
  }
  return out;
}

Report check_intersection_property(const FlagConfig& cfg, int trials, std::uint64_t seed) {
  const std::size_t n = cfg.n();
  Report report;
  report.instance = "intersection property n=" + std::to_string(n);
  GenericSampler sampler(seed);
  for (int trial = 1; trial <= trials; ++trial) {
    bool decided = false;
    for (int attempt = 0; attempt < kGenericRetries && !decided; ++attempt) {
      RatVector y = sampler.draw(cfg.nvars());
      bool generic = true;
      std::string failure;
      for (std::size_t k = 1; k <= cfg.nvars() && generic && failure.empty(); ++k) {
        const TableIndex t = index_of(n, k);
        RatMatrix v = cfg.subspace(t.i, t.j).evaluate(y);
        RatMatrix m = cfg.m(t.i + t.j - 1).evaluate(y);
        if (rank(m) != t.i + t.j - 1 || rank(v) != t.i) {
          generic = false;
          break;
        }
        RatMatrix cap = truncate_intersection(m, n - t.j + 1);
        if (rank(cap) != t.i) {
          generic = false;
          break;
        }
        if (!row_space_contains(cap, v)) failure = "V" + pos(t.i, t.j) + " differs from F cap M";
      }
      if (!generic) continue;
      decided = true;
      report.add("trial " + std::to_string(trial), failure.empty(), failure);
    }
    if (!decided) report.add("trial " + std::to_string(trial), false, "inconclusive: no generic point found");
  }
  return report;
}

Report check_incidence(const FlagConfig& cfg, std::uint64_t seed) {
  const std::size_t n = cfg.n();
  Report report;
  report.instance = "incidence n=" + std::to_string(n);
  GenericSampler sampler(seed);
  std::string failure;
  for (std::size_t s = 0; s <= cfg.nvars() && failure.empty(); ++s) {
    RatVector y = sampler.draw(cfg.nvars());
    for (std::size_t k = 1; k <= cfg.nvars() && failure.empty(); ++k) {
      const TableIndex t = index_of(n, k);
      RatMatrix v = cfg.subspace(t.i, t.j).evaluate(y);
      if (t.i > 1 && !row_space_contains(v, cfg.subspace(t.i - 1, t.j + 1).evaluate(y))) {
        failure = "V" + pos(t.i - 1, t.j + 1) + " not in V" + pos(t.i, t.j);
      }
      if (t.i + t.j < n) {
        RatMatrix up = cfg.subspace(t.i + 1, t.j).evaluate(y);
        if (!row_space_contains(up, v)) failure = "V" + pos(t.i, t.j) + " not in V" + pos(t.i + 1, t.j);
        if (t.i + t.j + 1 <= n && !row_space_contains(up, cfg.subspace(t.i, t.j + 1).evaluate(y))) {
          failure = "V" + pos(t.i, t.j + 1) + " not in V" + pos(t.i + 1, t.j);
        }
      }
    }
  }
  report.add("incidence at " + std::to_string(cfg.nvars() + 1) + " random points", failure.empty(), failure);

  RatVector origin(cfg.nvars(), Rational(0));
  bool origin_ok = true;
  for (std::size_t i = 1; i < n; ++i) {
    RatMatrix m = cfg.m(i).evaluate(origin);
    RatMatrix e(0, n);
    for (std::size_t c = n - i; c < n; ++c) {
      RatVector row(n, Rational(0));
      row[c] = 1;
      e.append_row(row);
    }
    origin_ok = origin_ok && rank(m) == i && row_space_contains(e, m);
  }
  report.add("origin is the opposite flag", origin_ok);
  return report;
}

bool equal_up_to_scaling(const PolyMatrix& actual, const PolyMatrix& expected, std::string* why, RatVector* factors) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (actual.rows() != expected.rows() || actual.cols() != expected.cols() || actual.nvars() != expected.nvars()) {
    return fail("shape mismatch");
  }
  for (std::size_t c = 0; c < actual.cols(); ++c) {
    std::size_t ra = 0, re = 0;
    bool ua = is_unit_column(actual, c, ra);
    bool ue = is_unit_column(expected, c, re);
    if (ua != ue || (ua && ra != re)) return fail("identity columns differ at column " + std::to_string(c + 1));
  }
  const std::size_t nv = actual.nvars();
  struct Constraint {
    Monomial m;
    Rational ratio;
    std::string where;
  };
  std::vector<Constraint> constraints;
  for (std::size_t r = 0; r < actual.rows(); ++r) {
    for (std::size_t c = 0; c < actual.cols(); ++c) {
      const Polynomial& a = actual(r, c);
      const Polynomial& e = expected(r, c);
      const std::string where = "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      if (a.term_count() != e.term_count()) {
        return fail(where + ": " + a.to_string() + " vs " + e.to_string());
      }
      for (const auto& [mono, coef] : a.terms()) {
        Rational ec = e.coefficient(mono);
        if (sgn(ec) == 0) return fail(where + ": " + a.to_string() + " vs " + e.to_string());
        constraints.push_back({mono, ec / coef, where});
      }
    }
  }
  std::vector<std::optional<Rational>> scale(nv);
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& con : constraints) {
      std::size_t unknown = nv, unknown_count = 0;
      Rational known = 1;
      for (std::size_t v = 0; v < nv; ++v) {
        const auto e = con.m.exponents[v];
        if (e == 0) continue;
        if (scale[v]) {
          for (std::uint32_t p = 0; p < e; ++p) known *= *scale[v];
        } else {
          unknown = v;
          unknown_count += e;
        }
      }
      if (unknown_count == 1) {
        scale[unknown] = con.ratio / known;
        progress = true;
      }
    }
  }
  RatVector c(nv, Rational(1));
  for (std::size_t v = 0; v < nv; ++v) {
    if (scale[v]) c[v] = *scale[v];
  }
  for (const auto& con : constraints) {
    Rational value = 1;
    for (std::size_t v = 0; v < nv; ++v) {
      if (con.m.exponents[v] && !scale[v]) return fail("scale of y" + std::to_string(v + 1) + " undetermined");
      for (std::uint32_t p = 0; p < con.m.exponents[v]; ++p) value *= c[v];
    }
    if (value != con.ratio) return fail(con.where + ": coefficients not related by a coordinate scaling");
  }
  if (factors) *factors = c;
  return true;
}

std::optional<std::vector<std::size_t>> find_relabeling(const PolyMatrix& actual, const PolyMatrix& expected) {
  const std::size_t nv = actual.nvars();
  if (nv > 8) throw UnsupportedSize("relabeling search limited to 8 variables");
  std::vector<std::size_t> perm(nv);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (equal_up_to_scaling(relabel_matrix(actual, perm), expected)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<Polynomial> maximal_minors(const PolyMatrix& m) {
  const std::size_t r = m.rows(), n = m.cols();
  if (r == 0 || r > n) throw UsageError("maximal minors need 1 <= rows <= cols");
  std::vector<std::size_t> rows(r), cols(r);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<Polynomial> out;
  while (true) {
    out.push_back(poly_minor(m, rows, cols));
    std::size_t idx = r;
    while (idx > 0 && cols[idx - 1] == n - r + idx - 1) --idx;
    if (idx == 0) break;
    ++cols[idx - 1];
    for (std::size_t q = idx; q < r; ++q) cols[q] = cols[q - 1] + 1;
  }
  return out;
}

std::string canonical_case_id(const std::string& case_id) {
  static const std::regex paren(R"(fund\((\d+),\s*(\d+)\))");
  std::smatch match;
  if (std::regex_match(case_id, match, paren)) return "fund_" + match[1].str() + "_" + match[2].str();
  return case_id;
}

SectionBasis sections_for(const std::string& raw_id) {
  const std::string id = canonical_case_id(raw_id);
  if (id == "gl3_210") {
    SectionBasis b{id, Weight({2, 1, 0}), {}};
    for (const char* s : {"1", "y1", "y2", "y3", "y1*y3", "y2*y3", "y1*y2*y3 - y2^2", "y1^2*y3 - y1*y2"}) {
      b.sections.push_back(Polynomial::parse(3, s));
    }
    return b;
  }
  if (id == "g24_1100") {
    PolyMatrix m = PolyMatrix::parse(6, {{"y4*y6 + y5", "y4", "1", "0"}, {"y2*y6 + y3", "y2", "0", "1"}});
    return SectionBasis{id, Weight({1, 1, 0, 0}), maximal_minors(m)};
  }
  if (id == "g36_display") {
    PolyMatrix m = PolyMatrix::parse(15, {{"y10", "y11", "y12", "1", "0", "0"},
                                          {"y7", "y8", "y9", "0", "1", "0"},
                                          {"y4", "y5", "y6", "0", "0", "1"}});
    return SectionBasis{id, Weight({1, 1, 1, 0, 0, 0}), maximal_minors(m)};
  }
  if (id == "g36_111000") {
    FlagConfig cfg = build_config(6);
    return SectionBasis{id, Weight({1, 1, 1, 0, 0, 0}), maximal_minors(cfg.m(3))};
  }
  static const std::regex fund(R"(fund_(\d+)_(\d+))");
  std::smatch match;
  if (std::regex_match(id, match, fund)) {
    const std::size_t n = std::stoul(match[1].str());
    const std::size_t i = std::stoul(match[2].str());
    if (n < 2 || n > 8 || i < 1 || i >= n) throw UsageError("fund case needs 2 <= n <= 8 and 1 <= i < n");
    FlagConfig cfg = build_config(n);
    return SectionBasis{id, fundamental_weight(n, i), maximal_minors(cfg.m(i))};
  }
  throw UsageError("unknown case id '" + raw_id + "'");
}

}  // namespace flagpoly
