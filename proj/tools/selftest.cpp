#include <algorithm>
#include <functional>

#include "commands.hpp"
#include "flagpoly/dyck.hpp"
#include "flagpoly/errors.hpp"
#include "flagpoly/fflv.hpp"
#include "flagpoly/fiber.hpp"
#include "flagpoly/flagcoords.hpp"
#include "flagpoly/gz.hpp"
#include "flagpoly/lattice.hpp"
#include "flagpoly/novaluation.hpp"
#include "flagpoly/replib.hpp"
#include "flagpoly/table_index.hpp"

namespace flagpoly::cli {
namespace {

struct Term {
  std::size_t l, m;
};

// sum of u^l_m over `terms` <= rhs, or >= 0 for a single term when rhs is empty.
Halfspace sum_le(std::size_t n, std::initializer_list<Term> terms, long rhs) {
  Halfspace h{RatVector(table_dim(n), Rational(0)), Rational(rhs)};
  for (auto t : terms) h.coeffs[flat_of(n, t.l, t.m) - 1] = 1;
  return h;
}

Halfspace nonneg(std::size_t n, std::size_t l, std::size_t m) {
  Halfspace h{RatVector(table_dim(n), Rational(0)), Rational(0)};
  h.coeffs[flat_of(n, l, m) - 1] = -1;
  return h;
}

void zero(std::vector<Halfspace>& hs, std::size_t n, std::size_t l, std::size_t m) {
  hs.push_back(sum_le(n, {{l, m}}, 0));
  hs.push_back(nonneg(n, l, m));
}

bool same_halfspace_sets(std::vector<Halfspace> a, std::vector<Halfspace> b) {
  for (auto& h : a) h = normalized(h);
  for (auto& h : b) h = normalized(h);
  std::sort(a.begin(), a.end(), canonical_less);
  std::sort(b.begin(), b.end(), canonical_less);
  return a == b;
}

LatticePointSet points_of(std::initializer_list<LatticePoint> pts) { return LatticePointSet(pts); }

}  // namespace

Report run_selftest(std::uint64_t seed) {
  Report r;
  r.instance = "selftest";
  auto check = [&](const std::string& name, const std::function<bool()>& f) {
    try {
      r.add(name, f());
    } catch (const std::exception& e) {
      r.add(name, false, std::string("exception: ") + e.what());
    }
  };
  const Weight w210({2, 1, 0}), w3210({3, 2, 1, 0}), w1100({1, 1, 0, 0});
  const long l1 = 3, l2 = 2, l3 = 1, l4 = 0;

  // exactmath
  check("lex (1,1,1) > (0,2,0)", [] { return lex_compare(Monomial({1, 1, 1}), Monomial({0, 2, 0})) > 0; });
  check("lex (2,0,1) > (1,1,0)", [] { return lex_compare(Monomial({2, 0, 1}), Monomial({1, 1, 0})) > 0; });
  check("v(y1y2y3 - y2^2) = (0,2,0)",
        [] { return lowest_term(Polynomial::parse(3, "y1*y2*y3 - y2^2")) == Monomial({0, 2, 0}); });
  check("v(y1^2y3 - y1y2) = (1,1,0)",
        [] { return lowest_term(Polynomial::parse(3, "y1^2*y3 - y1*y2")) == Monomial({1, 1, 0}); });
  check("G(2,4) minor on columns 1,2", [] {
    PolyMatrix m = PolyMatrix::parse(6, {{"y4*y6 + y5", "y4", "1", "0"}, {"y2*y6 + y3", "y2", "0", "1"}});
    std::vector<std::size_t> rows{0, 1}, cols{0, 1};
    Polynomial target = Polynomial::parse(6, "y2*y5 - y3*y4");
    Polynomial minor = poly_minor(m, rows, cols);
    return minor == target || minor == -target;
  });
  check("max u^1_1 + u^2_1 + u^1_2 over FFLV(2,1,0) is 2", [&] {
    RatVector c(3, Rational(0));
    for (auto [l, m] : {std::pair{1, 1}, {2, 1}, {1, 2}}) c[flat_of(3, l, m) - 1] = 1;
    LpResult res = fflv_polytope(w210).maximize(c);
    return res.optimal() && res.value == 2;
  });

  // polytope
  const LatticePointSet gl3_points =
      points_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 2, 0}, {1, 1, 0}});
  check("FFLV(2,1,0) has the 8 listed lattice points", [&] { return lattice_points(fflv_polytope(w210)) == gl3_points; });
  check("(0,2,0) lies in FFLV(2,1,0)", [&] {
    LatticePoint x{0, 2, 0};
    return contains(fflv_polytope(w210), x);
  });
  check("FFLV(1,1,0,0) equals the hull of its 6 lattice points", [&] {
    Polytope p = fflv_polytope(w1100);
    std::vector<RatVector> pts;
    for (const auto& x : lattice_points(p)) pts.push_back(to_rational(x));
    return pts.size() == 6 && equal(p, convex_hull(6, pts));
  });
  check("FFLV(3,2,1,0) has 13 facets", [&] { return irredundant(fflv_polytope(w3210)).facets.size() == 13; });
  check("F_1(3,2,1,0) has 11 facets", [&] { return irredundant(fflv_face(w3210, 1)).facets.size() == 11; });
  check("GZ(2,1,0) and FFLV(2,1,0) have equally many vertices",
        [&] { return vertices(gz_polytope(w210)).size() == vertices(fflv_polytope(w210)).size(); });

  // fflv
  check("n=4, k=2 is table position (2,2)", [] { return index_of(4, 2) == TableIndex{4, 2, 2, 2}; });
  check("n=3: 3 Dyck paths, 6 inequalities", [&] {
    return all_dyck_paths(3).size() == 3 && fflv_polytope(w210).halfspaces().size() == 6;
  });
  check("n=4: 7 Dyck paths, two from lambda_1 to lambda_4", [] {
    auto p = dyck_paths(4, 1, 4);
    std::vector<std::vector<std::size_t>> got;
    for (const auto& path : p) {
      auto c = path.coordinates(4);
      std::sort(c.begin(), c.end());
      got.push_back(c);
    }
    auto want = [](std::initializer_list<Term> ts) {
      std::vector<std::size_t> c;
      for (auto t : ts) c.push_back(flat_of(4, t.l, t.m) - 1);
      std::sort(c.begin(), c.end());
      return c;
    };
    std::vector<std::vector<std::size_t>> expected = {want({{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}}),
                                                      want({{1, 1}, {2, 1}, {3, 1}, {2, 2}, {1, 3}})};
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    return all_dyck_paths(4).size() == 7 && got == expected;
  });
  check("FFLV(2,1,0) inequalities", [&] {
    const long a = 2, b = 1, c = 0;
    std::vector<Halfspace> hs = {nonneg(3, 1, 1), sum_le(3, {{1, 1}}, a - b), nonneg(3, 1, 2),
                                 sum_le(3, {{1, 2}}, b - c), nonneg(3, 2, 1), sum_le(3, {{1, 1}, {2, 1}, {1, 2}}, a - c)};
    return same_halfspace_sets(fflv_polytope(w210).halfspaces(), hs);
  });
  check("FFLV(3,2,1,0) inequalities", [&] {
    std::vector<Halfspace> hs = {nonneg(4, 1, 1), sum_le(4, {{1, 1}}, l1 - l2), nonneg(4, 1, 2),
                                 sum_le(4, {{1, 2}}, l2 - l3), nonneg(4, 1, 3), sum_le(4, {{1, 3}}, l3 - l4),
                                 nonneg(4, 2, 1), nonneg(4, 2, 2), nonneg(4, 3, 1),
                                 sum_le(4, {{1, 1}, {2, 1}, {1, 2}}, l1 - l3), sum_le(4, {{1, 2}, {2, 2}, {1, 3}}, l2 - l4),
                                 sum_le(4, {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}}, l1 - l4),
                                 sum_le(4, {{1, 1}, {2, 1}, {3, 1}, {2, 2}, {1, 3}}, l1 - l4)};
    return equal(fflv_polytope(w3210), Polytope(6, hs)) && irredundant(Polytope(6, hs)).facets.size() == 13;
  });
  check("F_2(3,2,1,0) inequalities", [&] {
    std::vector<Halfspace> hs = {nonneg(4, 1, 1), sum_le(4, {{1, 1}}, l1 - l2), nonneg(4, 1, 2),
                                 sum_le(4, {{1, 2}}, l2 - l3), nonneg(4, 2, 1), nonneg(4, 3, 1),
                                 sum_le(4, {{1, 1}, {2, 1}, {1, 2}}, l1 - l3), sum_le(4, {{1, 1}, {2, 1}, {3, 1}}, l1 - l4)};
    zero(hs, 4, 1, 3);
    zero(hs, 4, 2, 2);
    return equal(fflv_face(w3210, 2), Polytope(6, hs));
  });
  check("F_1(3,2,1,0) inequalities after elimination", [&] {
    std::vector<Halfspace> hs = {nonneg(4, 1, 1), sum_le(4, {{1, 1}}, l1 - l2), nonneg(4, 1, 2),
                                 sum_le(4, {{1, 2}}, l2 - l3), sum_le(4, {{1, 2}, {2, 2}}, l2 - l4),
                                 nonneg(4, 2, 1), nonneg(4, 3, 1), nonneg(4, 2, 2),
                                 sum_le(4, {{1, 1}, {2, 1}, {1, 2}}, l1 - l3),
                                 sum_le(4, {{1, 1}, {2, 1}, {1, 2}, {2, 2}}, l1 - l4),
                                 sum_le(4, {{1, 1}, {2, 1}, {3, 1}, {2, 2}}, l1 - l4)};
    zero(hs, 4, 1, 3);
    return equal(fflv_face(w3210, 1), Polytope(6, hs));
  });
  check("mu(t) for n=4, k=2", [&] {
    const Weight w({7, 5, 3, 1});
    WeightPath p = mu_path(w, 2);
    for (long t = 1; t <= 5; ++t) {
      std::vector<long> want = t <= 3 ? std::vector<long>{7, 5, 3, t} : std::vector<long>{7, 5, t, t};
      if (mu_at(p, t).entries() != want) return false;
    }
    return p.lo == 1 && p.hi == 5;
  });

  // gz
  check("z(t) = 0 when i = 1", [&] {
    for (std::size_t k = 1; k <= 6; ++k) {
      TableIndex t = index_of(4, k);
      if (t.i != 1) continue;
      WeightPath p = mu_path(w3210, k);
      for (long s = p.lo; s <= p.hi; ++s) {
        auto z = shift_at(w3210, k, Rational(s));
        if (std::any_of(z.begin(), z.end(), [](const Rational& x) { return sgn(x) != 0; })) return false;
      }
    }
    return true;
  });
  check("G_1(3,2,1,0) has 10 facets", [&] { return irredundant(gz_face(w3210, 1)).facets.size() == 10; });
  check("GZ(1,1,0,0) has 6 integer patterns", [&] { return gz_lattice_points_fast(w1100).size() == 6; });

  // fiber
  check("(1,1,0,0): F_0 and G_0 both have 6 points", [&] {
    EhrhartComparison e = compare_ehrhart(w1100, 0, 1);
    return e.fflv_counts == std::vector<std::uint64_t>{6} && e.gz_counts == std::vector<std::uint64_t>{6};
  });

  // flagcoords
  check("word for n=4", [] { return word(4).letters == std::vector<std::size_t>{1, 2, 1, 3, 2, 1}; });
  check("n=3 subspaces", [] {
    FlagConfig cfg = build_config(3);
    return equal_up_to_scaling(cfg.subspace(1, 1), PolyMatrix::parse(3, {{"y3*y1 - y2", "y3", "1"}})) &&
           equal_up_to_scaling(cfg.subspace(1, 2), PolyMatrix::parse(3, {{"y1", "1", "0"}})) &&
           equal_up_to_scaling(cfg.subspace(2, 1), PolyMatrix::parse(3, {{"y1", "1", "0"}, {"-y2", "0", "1"}}));
  });
  {
    // Literal comparison up to coordinate scaling; the witness names the
    // relabeling under which the two matrices do agree, if any.
    PolyMatrix expected = PolyMatrix::parse(6, {{"y4*y6 + y5", "y4", "1", "0"}, {"y2*y6 + y3", "y2", "0", "1"}});
    PolyMatrix actual = build_config(4).subspace(2, 1);
    std::string why;
    bool ok = equal_up_to_scaling(actual, expected, &why);
    if (!ok) {
      if (auto perm = find_relabeling(actual, expected)) {
        why += "; agrees after renaming y_k to y_{perm(k)} with perm =";
        for (auto v : *perm) why += " " + std::to_string(v + 1);
      }
    }
    r.add("n=4 plane V^2_1", ok, why);
  }
  check("origin is the opposite flag (n=3,4)", [&] {
    return check_incidence(build_config(3), seed).passed() && check_incidence(build_config(4), seed).passed();
  });
  check("GL_3 section basis", [] {
    SectionBasis b = sections_for("gl3_210");
    return b.sections.size() == 8 && b.sections[6] == Polynomial::parse(3, "y1*y2*y3 - y2^2");
  });
  check("G(2,4) Pluecker coordinates", [] {
    SectionBasis b = sections_for("g24_1100");
    std::vector<Polynomial> want;
    for (const char* s : {"y2*y5 - y3*y4", "-y2*y6 - y3", "y4*y6 + y5", "-y2", "y4", "1"}) {
      want.push_back(Polynomial::parse(6, s));
    }
    return b.sections == want;
  });

  // novaluation
  check("GL_3 valuation images", [&] { return no_points("gl3_210") == gl3_points; });
  check("G(2,4) valuation images", [] {
    auto pts = no_points("g24_1100");
    LatticePointSet projected;
    for (const auto& p : pts) {
      if (p[flat_of(4, 1, 1) - 1] != 0 || p[flat_of(4, 1, 3) - 1] != 0) return false;
      projected.insert({p[flat_of(4, 2, 1) - 1], p[flat_of(4, 3, 1) - 1], p[flat_of(4, 1, 2) - 1],
                        p[flat_of(4, 2, 2) - 1]});
    }
    return projected == points_of({{0, 1, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}});
  });
  check("GL_3 case verifies against FFLV(2,1,0)", [] { return verify_case("gl3_210").report.passed(); });
  check("G(2,4) case verifies against FFLV(1,1,0,0)", [] { return verify_case("g24_1100").report.passed(); });
  check("fund(4,2) images are the lattice points of FFLV(1,1,0,0)", [] {
    return minkowski_check(4, {0, 1, 0}).passed();
  });

  // replib
  check("weyl_dim(2,1,0) = 8, weyl_dim(1,1,0,0) = 6", [&] { return weyl_dim(w210) == 8 && weyl_dim(w1100) == 6; });
  check("brute count of FFLV(2,1,0) is 8", [&] { return brute_count(fflv_polytope(w210)) == 8; });

  // cli
  check("compare (3,2,1,0): counts agree for m=1..3, facets 13 vs 12", [&] {
    for (long m = 1; m <= 3; ++m) {
      Weight wm = w3210.scaled(m);
      Integer d = weyl_dim(wm);
      if (Integer(std::to_string(count_lattice_points(fflv_polytope(wm)))) != d) return false;
      if (Integer(std::to_string(count_lattice_points(gz_polytope(wm)))) != d) return false;
    }
    return irredundant(fflv_polytope(w3210)).facets.size() == 13 && irredundant(gz_polytope(w3210)).facets.size() == 12;
  });
  return r;
}

}  // namespace flagpoly::cli
