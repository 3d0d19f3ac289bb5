// Acceptance gate: one line per criterion, exit status 0 only if every
// selected criterion passes within its time budget.
//
//   acceptance          run all criteria
//   acceptance 3 5      run only criteria 3 and 5

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

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

using namespace flagpoly;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

// Instances whose lattice counts criterion 9 re-derives by brute force.
std::vector<Polytope>& touched() {
  static std::vector<Polytope> polys;
  return polys;
}

std::string pt(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

// Hand-written inequality systems of the two FFLV examples, independent of
// the Dyck path generator. Entry (l, m) is coordinate flat_of(n, l, m).
struct SystemBuilder {
  std::size_t n;
  std::vector<Halfspace> hs;

  void le(std::initializer_list<std::pair<std::size_t, std::size_t>> terms, long rhs) {
    Halfspace h{RatVector(table_dim(n), Rational(0)), Rational(rhs)};
    for (auto [l, m] : terms) h.coeffs[flat_of(n, l, m) - 1] = 1;
    hs.push_back(h);
  }
  void ge0(std::size_t l, std::size_t m) {
    Halfspace h{RatVector(table_dim(n), Rational(0)), Rational(0)};
    h.coeffs[flat_of(n, l, m) - 1] = -1;
    hs.push_back(h);
  }
  Polytope build() const { return Polytope(table_dim(n), hs); }
};

Polytope example_a(long a, long b, long c) {
  SystemBuilder s{3, {}};
  s.ge0(1, 1), s.le({{1, 1}}, a - b);
  s.ge0(1, 2), s.le({{1, 2}}, b - c);
  s.ge0(2, 1);
  s.le({{1, 1}, {2, 1}, {1, 2}}, a - c);
  return s.build();
}

Polytope example_b(long l1, long l2, long l3, long l4) {
  SystemBuilder s{4, {}};
  s.ge0(1, 1), s.le({{1, 1}}, l1 - l2);
  s.ge0(1, 2), s.le({{1, 2}}, l2 - l3);
  s.ge0(1, 3), s.le({{1, 3}}, l3 - l4);
  s.ge0(2, 1), s.ge0(2, 2), s.ge0(3, 1);
  s.le({{1, 1}, {2, 1}, {1, 2}}, l1 - l3);
  s.le({{1, 2}, {2, 2}, {1, 3}}, l2 - l4);
  s.le({{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}}, l1 - l4);
  s.le({{1, 1}, {2, 1}, {3, 1}, {2, 2}, {1, 3}}, l1 - l4);
  return s.build();
}

Polytope hull_of(std::size_t d, const LatticePointSet& pts) {
  std::vector<RatVector> v;
  for (const auto& p : pts) v.push_back(to_rational(p));
  return convex_hull(d, v);
}

const std::vector<Weight>& ehrhart_weights() {
  static const std::vector<Weight> ws = {Weight({2, 1, 0}), Weight({3, 1, 0}), Weight({3, 2, 1, 0}), Weight({2, 1, 1, 0})};
  return ws;
}

Outcome criterion1() {
  Outcome o;
  const LatticePointSet expected = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 2, 0}, {1, 1, 0}};
  SectionBasis basis = sections_for("gl3_210");
  auto images = valuation_images(basis);
  LatticePointSet got(images.begin(), images.end());
  o.require(images.size() == 8 && got.size() == 8, "8 sections with distinct valuations");
  o.require(got == expected, "valuation points equal the listed 8 points");
  Polytope hull = hull_of(3, got);
  o.require(equal(hull, example_a(2, 1, 0)), "hull equals the hand-written system for (2,1,0)");
  o.require(equal(hull, fflv_polytope(Weight({2, 1, 0}))), "hull equals fflv_polytope(2,1,0)");
  touched().push_back(fflv_polytope(Weight({2, 1, 0})));
  o.note("8 points, hull = FFLV(2,1,0)");
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto images = valuation_images(sections_for("g24_1100"));
  LatticePointSet got(images.begin(), images.end());
  o.require(images.size() == 6 && got.size() == 6, "6 distinct valuation points");
  LatticePointSet projected;
  for (const auto& p : got) {
    o.require(p[flat_of(4, 1, 1) - 1] == 0 && p[flat_of(4, 1, 3) - 1] == 0, "point " + pt(p) + " in {u^1_1 = u^1_3 = 0}");
    projected.insert({p[flat_of(4, 2, 1) - 1], p[flat_of(4, 3, 1) - 1], p[flat_of(4, 1, 2) - 1], p[flat_of(4, 2, 2) - 1]});
  }
  const LatticePointSet expected = {{0, 1, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}};
  o.require(projected == expected, "points in (u^2_1,u^3_1,u^1_2,u^2_2) equal the listed 6");
  Polytope hull = hull_of(6, got);
  o.require(equal(hull, example_b(1, 1, 0, 0)), "hull equals the hand-written 13-inequality system at (1,1,0,0)");
  o.require(equal(hull, fflv_polytope(Weight({1, 1, 0, 0}))), "hull equals fflv_polytope(1,1,0,0)");
  touched().push_back(fflv_polytope(Weight({1, 1, 0, 0})));
  o.note("6 points in the face u^1_1 = u^1_3 = 0, hull = FFLV(1,1,0,0)");
  return o;
}

Outcome criterion3() {
  Outcome o;
  NOReport r = verify_case("g36_111000");
  o.require(r.points.size() == 20 && r.distinct, "20 minors with distinct valuations");
  o.require(r.matches_fflv, "valuations equal the lattice points of FFLV(1,1,1,0,0,0)");
  bool dyck = false;
  for (const auto& c : r.report.checks) {
    if (c.name.rfind("dyck pair criterion", 0) == 0) {
      dyck = c.pass;
      o.note(c.name + (c.pass ? "" : ": " + c.witness));
    }
  }
  o.require(dyck, "no-shared-Dyck-path criterion");
  Polytope p = fflv_polytope(Weight({1, 1, 1, 0, 0, 0}));
  o.require(lattice_points(p).size() == 20, "FFLV(1,1,1,0,0,0) has 20 lattice points");
  touched().push_back(p);
  touched().push_back(gz_polytope(Weight({1, 1, 1, 0, 0, 0})));

  NOReport display = verify_case("g36_display");
  o.note(std::string("diagnostic: minors of the literal 3x6 matrix in y4..y12 (g36_display) ") +
         (display.report.passed() ? "also pass" : "do not match FFLV in the cell coordinates"));
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::vector<Weight> ws;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto part = dominant_weights(n, 3);
    ws.insert(ws.end(), part.begin(), part.end());
  }
  const std::vector<Weight> spot = {Weight({1, 0, 0, 0, 0}), Weight({1, 1, 0, 0, 0}), Weight({2, 1, 0, 0, 0}),
                                    Weight({2, 1, 1, 0, 0}), Weight({2, 2, 1, 1, 0}), Weight({3, 2, 1, 0, 0}),
                                    Weight({3, 1, 1, 1, 0}), Weight({2, 2, 2, 0, 0})};
  ws.insert(ws.end(), spot.begin(), spot.end());
  for (const auto& w : ws) {
    Polytope f = fflv_polytope(w), g = gz_polytope(w);
    std::uint64_t cf = count_lattice_points(f), cg = count_lattice_points(g);
    Integer weyl = weyl_dim(w);
    o.require(Integer(std::to_string(cf)) == weyl && Integer(std::to_string(cg)) == weyl,
              w.to_string() + ": FFLV " + std::to_string(cf) + ", GZ " + std::to_string(cg) + ", Weyl " + to_string(weyl));
    touched().push_back(f);
    touched().push_back(g);
  }
  o.note(std::to_string(ws.size()) + " weights (" + std::to_string(spot.size()) + " with n = 5)");
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& w : ehrhart_weights()) {
    const std::size_t d = table_dim(w.n());
    for (std::size_t k = 0; k <= d; ++k) {
      const int dim = affine_hull(fflv_face(w, k)).dimension;
      EhrhartComparison e = compare_ehrhart(w, k, dim + 1);
      o.require(e.report.passed() && e.fflv_polynomial && e.gz_polynomial && *e.fflv_polynomial == *e.gz_polynomial,
                w.to_string() + " k=" + std::to_string(k));
      for (long m = 1; m <= dim + 1; ++m) {
        touched().push_back(fflv_face(w.scaled(m), k));
        touched().push_back(gz_face(w.scaled(m), k));
      }
      ++cases;
    }
  }
  o.note(std::to_string(cases) + " (lambda, k) pairs, polynomials agree coefficientwise");
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& w : ehrhart_weights()) {
    const std::size_t d = table_dim(w.n());
    for (std::size_t k = 1; k <= d; ++k) {
      Report f = check_slice_lemma_fflv(w, k);
      Report g = check_slice_lemma_gz(w, k);
      o.require(f.passed(), f.instance);
      o.require(g.passed(), g.instance);
      checks += f.checks.size() + g.checks.size();
      touched().push_back(fflv_face(w, k - 1));
      touched().push_back(gz_face(w, k - 1));
    }
  }
  o.note(std::to_string(checks) + " slice and hull checks");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const Weight w({3, 2, 1, 0});
  auto f0 = irredundant(fflv_polytope(w)).facets.size();
  auto g0 = irredundant(gz_polytope(w)).facets.size();
  auto f1 = irredundant(fflv_face(w, 1)).facets.size();
  auto g1 = irredundant(gz_face(w, 1)).facets.size();
  o.require(f0 == 13, "FFLV(3,2,1,0) has 13 facets (got " + std::to_string(f0) + ")");
  o.require(g0 == 12, "GZ(3,2,1,0) has 12 facets (got " + std::to_string(g0) + ")");
  o.require(f1 == 11, "F_1(3,2,1,0) has 11 facets (got " + std::to_string(f1) + ")");
  o.require(g1 == 10, "G_1(3,2,1,0) has 10 facets (got " + std::to_string(g1) + ")");
  for (const auto& p : {fflv_polytope(w), gz_polytope(w), fflv_face(w, 1), gz_face(w, 1)}) touched().push_back(p);
  o.note("facets 13 / 12 / 11 / 10");
  return o;
}

Outcome criterion8() {
  Outcome o;
  FlagConfig c3 = build_config(3);
  std::string why;
  o.require(equal_up_to_scaling(c3.subspace(1, 1), PolyMatrix::parse(3, {{"y3*y1 - y2", "y3", "1"}}), &why),
            "n=3 V^1_1 " + why);
  o.require(equal_up_to_scaling(c3.subspace(1, 2), PolyMatrix::parse(3, {{"y1", "1", "0"}}), &why), "n=3 V^1_2 " + why);
  o.require(equal_up_to_scaling(c3.subspace(2, 1), PolyMatrix::parse(3, {{"y1", "1", "0"}, {"-y2", "0", "1"}}), &why),
            "n=3 V^2_1 " + why);

  FlagConfig c4 = build_config(4);
  PolyMatrix expected = PolyMatrix::parse(6, {{"y4*y6 + y5", "y4", "1", "0"}, {"y2*y6 + y3", "y2", "0", "1"}});
  why.clear();
  bool v21 = equal_up_to_scaling(c4.subspace(2, 1), expected, &why);
  if (!v21) {
    std::string diag = "n=4 V^2_1 up to coordinate scaling (" + why + ")";
    if (auto perm = find_relabeling(c4.subspace(2, 1), expected)) {
      diag += "; agrees after renaming y_k to y_{perm(k)}, perm =";
      for (auto v : *perm) diag += " " + std::to_string(v + 1);
    }
    o.require(false, diag);
  }

  for (std::size_t n : {3u, 4u}) {
    Report r = check_intersection_property(build_config(n), 20);
    std::size_t passed = r.checks.size() - r.failures();
    o.require(r.passed() && r.checks.size() == 20,
              "n=" + std::to_string(n) + " intersection property " + std::to_string(passed) + "/20");
    o.note("n=" + std::to_string(n) + " intersection property " + std::to_string(passed) + "/20");
  }
  return o;
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars) {
  std::uniform_int_distribution<int> terms(1, 6), expo(0, 3), num(-9, 9), den(1, 5);
  Polynomial f(nvars);
  while (f.is_zero()) {
    int t = terms(rng);
    for (int s = 0; s < t; ++s) {
      std::vector<std::uint32_t> e(nvars);
      for (auto& x : e) x = static_cast<std::uint32_t>(expo(rng));
      int a = num(rng);
      if (a == 0) a = 1;
      f += Polynomial::monomial(Monomial(e), make_rational(Integer(a), Integer(den(rng))));
    }
  }
  return f;
}

Outcome criterion9() {
  Outcome o;
  // Deduplicate by canonical halfspace list.
  std::set<std::string> seen;
  std::size_t compared = 0, skipped = 0;
  for (const auto& p : touched()) {
    std::string key = std::to_string(p.dim());
    const Polytope canon = p.canonical();
    for (const auto& h : canon.halfspaces()) {
      for (const auto& c : h.coeffs) key += "," + to_string(c);
      key += "|" + to_string(h.rhs);
    }
    if (!seen.insert(key).second) continue;
    std::uint64_t brute = 0;
    try {
      brute = brute_count(p);
    } catch (const UnsupportedSize&) {
      ++skipped;
      continue;
    }
    std::uint64_t fast = count_lattice_points(p);
    ++compared;
    if (brute != fast) {
      o.require(false, "instance " + std::to_string(compared) + ": brute " + std::to_string(brute) + " vs enumerator " +
                           std::to_string(fast));
    }
  }
  o.require(compared > 0, "at least one instance compared (run criteria 1-7 first)");
  o.require(skipped == 0, std::to_string(skipped) + " instances exceeded the brute-force box guard");

  std::mt19937_64 rng(kDefaultSeed);
  std::size_t bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t nvars = 1 + static_cast<std::size_t>(trial % 4);
    Polynomial f = random_polynomial(rng, nvars), g = random_polynomial(rng, nvars);
    Monomial sum = lowest_term(f) * lowest_term(g);
    if (lowest_term(f * g) != sum) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " of 1000 random products violate v(fg) = v(f) + v(g)");
  o.note(std::to_string(compared) + " distinct polytopes brute-counted; 1000 random products multiplicative");
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t runs = 0;
  for (long a = 0; a <= 3; ++a) {
    for (long b = 0; a + b <= 3; ++b) {
      Report r = minkowski_check(3, {a, b});
      o.require(r.passed(), r.instance);
      ++runs;
    }
  }
  Report r4 = minkowski_check(4, {0, 1, 0});
  o.require(r4.passed(), r4.instance);
  o.note(std::to_string(runs) + " multiplicity vectors for n=3, plus n=4 (0,1,0)");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "GL3 golden case", 1, criterion1},
      {2, "G(2,4) golden case", 1, criterion2},
      {3, "G(3,6) minors", 30, criterion3},
      {4, "count equality sweep", 120, criterion4},
      {5, "Ehrhart equality of F_k and G_k", 300, criterion5},
      {6, "slice lemmas with hull reconstruction", 120, criterion6},
      {7, "facet counts", 10, criterion7},
      {8, "flag coordinates", 30, criterion8},
      {9, "oracle equivalence", 60, criterion9},
      {10, "Minkowski containment", 60, criterion10},
  };
  std::set<int> selected;
  for (int a = 1; a < argc; ++a) selected.insert(std::atoi(argv[a]));
  // Criterion 9 re-checks the instances of 1-7, so running it alone runs those silently first.
  const bool need_instances = selected.count(9) > 0;

  bool all_pass = true;
  for (const auto& c : all) {
    const bool chosen = selected.empty() || selected.count(c.id);
    const bool feeder = need_instances && c.id <= 7 && !chosen;
    if (!chosen && !feeder) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (feeder) continue;
    std::ostringstream budget;
    budget << std::fixed << std::setprecision(2) << secs << " s, budget " << std::setprecision(0) << c.budget_s << " s";
    out.require(secs < c.budget_s, "runtime " + budget.str());
    all_pass = all_pass && out.pass;
    std::cout << "criterion " << c.id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << c.title << " ("
              << budget.str() << ")\n";
    for (const auto& n : out.notes) std::cout << "    " << n << "\n";
  }
  return all_pass ? 0 : 1;
}
