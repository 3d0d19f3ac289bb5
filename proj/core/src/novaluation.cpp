#include "flagpoly/novaluation.hpp"

#include <algorithm>

#include "flagpoly/dyck.hpp"
#include "flagpoly/errors.hpp"
#include "flagpoly/fflv.hpp"
#include "flagpoly/replib.hpp"
#include "flagpoly/table_index.hpp"

namespace flagpoly {
namespace {

std::string point_string(const LatticePoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

LatticePoint unit_sum(std::size_t d, std::size_t p, std::size_t q) {
  LatticePoint x(d, 0);
  x[p] += 1;
  x[q] += 1;
  return x;
}

// e_p + e_q is a lattice point of FFLV(lambda) iff no Dyck path with a
// positive bound meets both coordinates (every path has rhs <= 1 here).
Report dyck_pair_criterion(std::size_t n, const LatticePointSet& points) {
  Report report;
  const std::size_t d = table_dim(n);
  std::vector<std::size_t> live;
  for (std::size_t c = 0; c < d; ++c) {
    LatticePoint e(d, 0);
    e[c] = 1;
    if (points.count(e)) live.push_back(c);
  }
  auto paths = all_dyck_paths(n);
  std::string witness;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < live.size(); ++a) {
    for (std::size_t b = a + 1; b < live.size(); ++b) {
      const std::size_t p = live[a], q = live[b];
      bool shared = false;
      for (const auto& path : paths) {
        auto cs = path.coordinates(n);
        if (std::find(cs.begin(), cs.end(), p) != cs.end() && std::find(cs.begin(), cs.end(), q) != cs.end()) {
          shared = true;
          break;
        }
      }
      ++pairs;
      bool present = points.count(unit_sum(d, p, q)) > 0;
      if (present == shared && witness.empty()) {
        witness = "coordinates a" + std::to_string(p + 1) + ", a" + std::to_string(q + 1) +
                  (shared ? ": image present although a Dyck path meets both" : ": image missing though no Dyck path meets both");
      }
    }
  }
  for (const auto& pt : points) {
    long ones = std::count(pt.begin(), pt.end(), 1);
    long nonzero = d - std::count(pt.begin(), pt.end(), 0);
    if (ones == 2 && nonzero == 2) {
      std::size_t p = d, q = d;
      for (std::size_t c = 0; c < d; ++c) {
        if (pt[c] == 1) (p == d ? p : q) = c;
      }
      if (std::find(live.begin(), live.end(), p) == live.end() || std::find(live.begin(), live.end(), q) == live.end()) {
        if (witness.empty()) witness = "two-unit point " + point_string(pt) + " uses a coordinate with no unit image";
      }
    }
  }
  report.add("dyck pair criterion over " + std::to_string(pairs) + " coordinate pairs", witness.empty(), witness);
  return report;
}

}  // namespace

std::vector<LatticePoint> valuation_images(const SectionBasis& basis) {
  std::vector<LatticePoint> out;
  for (std::size_t s = 0; s < basis.sections.size(); ++s) {
    if (basis.sections[s].is_zero()) {
      throw DomainError("catalog case " + basis.case_id + " has a zero section at position " + std::to_string(s + 1));
    }
    out.push_back(to_lattice_point(lowest_term(basis.sections[s])));
  }
  return out;
}

LatticePointSet no_points(const std::string& case_id) {
  auto images = valuation_images(sections_for(case_id));
  return LatticePointSet(images.begin(), images.end());
}

NOReport verify_case(const std::string& raw_id) {
  SectionBasis basis = sections_for(raw_id);
  NOReport out;
  out.case_id = basis.case_id;
  out.lambda = basis.lambda;
  out.report.instance = "newton-okounkov " + basis.case_id + " lambda=" + basis.lambda.to_string();
  out.points = valuation_images(basis);
  LatticePointSet set(out.points.begin(), out.points.end());
  out.distinct = set.size() == out.points.size();
  out.expected_count = to_int64(weyl_dim(basis.lambda));
  out.report.add("images pairwise distinct", out.distinct,
                 std::to_string(set.size()) + " distinct of " + std::to_string(out.points.size()));
  out.report.add("count equals Weyl dimension", out.points.size() == out.expected_count && out.distinct,
                 std::to_string(set.size()) + " vs " + std::to_string(out.expected_count));

  Polytope fflv = fflv_polytope(basis.lambda);
  LatticePointSet lattice = lattice_points(fflv);
  out.matches_fflv = lattice == set;
  std::string diff;
  for (const auto& p : set) {
    if (!lattice.count(p)) {
      diff = "image " + point_string(p) + " is not a lattice point of FFLV";
      break;
    }
  }
  if (diff.empty()) {
    for (const auto& p : lattice) {
      if (!set.count(p)) {
        diff = "lattice point " + point_string(p) + " is not an image";
        break;
      }
    }
  }
  out.report.add("images equal FFLV lattice points", out.matches_fflv, diff);

  const std::size_t d = fflv.dim();
  for (std::size_t c = 0; c < d; ++c) {
    RatVector e(d, Rational(0));
    e[c] = 1;
    if (fflv.maximize(e).value == 0) out.zero_coordinates.push_back(c);
  }
  if (d <= kMaxVertexDim && !set.empty()) {
    std::vector<RatVector> pts;
    for (const auto& p : set) pts.push_back(to_rational(p));
    bool hull = equal(convex_hull(d, pts), fflv);
    out.report.add("hull equals FFLV", hull);
  }
  if (basis.case_id.rfind("g36", 0) == 0) out.report.append(dyck_pair_criterion(basis.lambda.n(), set));
  return out;
}

Report minkowski_check(std::size_t n, const std::vector<long>& ks) {
  if (n < 2 || n > 4) throw UnsupportedSize("minkowski check limited to 2 <= n <= 4");
  if (ks.size() != n - 1) throw UsageError("need n-1 multiplicities");
  long total = 0;
  for (long k : ks) {
    if (k < 0) throw UsageError("multiplicities must be nonnegative");
    total += k;
  }
  if (total > 3) throw UnsupportedSize("minkowski check limited to multiplicity sum <= 3");

  Report report;
  std::string label = "(";
  for (std::size_t r = 0; r < ks.size(); ++r) label += (r ? "," : "") + std::to_string(ks[r]);
  report.instance = "minkowski n=" + std::to_string(n) + " k=" + label + ")";

  std::vector<long> lam(n, 0);
  std::vector<std::vector<Polynomial>> factors;  // one entry per factor slot
  for (std::size_t r = 1; r < n; ++r) {
    if (ks[r - 1] == 0) continue;
    SectionBasis b = sections_for("fund_" + std::to_string(n) + "_" + std::to_string(r));
    for (long c = 0; c < ks[r - 1]; ++c) factors.push_back(b.sections);
    for (std::size_t l = 0; l < r; ++l) lam[l] += ks[r - 1];
  }
  Weight lambda(lam);
  Polytope target = fflv_polytope(lambda);
  const std::size_t d = table_dim(n);

  std::string mult_witness, contain_witness;
  LatticePointSet images;
  std::size_t products = 0;
  std::vector<std::size_t> choice(factors.size(), 0);
  while (true) {
    Polynomial prod = Polynomial::constant(d, Rational(1));
    LatticePoint sum(d, 0);
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const Polynomial& s = factors[f][choice[f]];
      prod = prod * s;
      LatticePoint v = to_lattice_point(lowest_term(s));
      for (std::size_t c = 0; c < d; ++c) sum[c] += v[c];
    }
    LatticePoint v = to_lattice_point(lowest_term(prod));
    ++products;
    if (v != sum && mult_witness.empty()) mult_witness = "product valuation " + point_string(v) + " vs sum " + point_string(sum);
    if (!contains(target, v) && contain_witness.empty()) contain_witness = point_string(v) + " outside FFLV" + lambda.to_string();
    images.insert(v);
    std::size_t f = factors.size();
    while (f > 0 && ++choice[f - 1] == factors[f - 1].size()) choice[--f] = 0;
    if (f == 0) break;
  }
  report.add("valuation of products is additive (" + std::to_string(products) + " products)", mult_witness.empty(), mult_witness);
  report.add("images inside FFLV" + lambda.to_string(), contain_witness.empty(), contain_witness);
  if (total == 1) {
    bool same = images == lattice_points(target);
    report.add("images equal FFLV lattice points", same);
  }
  return report;
}

}  // namespace flagpoly
