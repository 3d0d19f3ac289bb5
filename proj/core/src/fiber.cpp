#include "flagpoly/fiber.hpp"

#include <algorithm>

#include "flagpoly/errors.hpp"
#include "flagpoly/fflv.hpp"
#include "flagpoly/gz.hpp"
#include "flagpoly/lattice.hpp"

namespace flagpoly {
namespace {

std::string point_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

SliceFamily fflv_family(const Weight& lambda, std::size_t k) {
  const std::size_t d = table_dim(lambda.n());
  if (k < 1 || k > d) throw UsageError("slice family needs 1 <= k <= d");
  WeightPath path = mu_path(lambda, k);
  SliceFamily fam{d, k - 1, path.lo, {}, {}};
  for (long t = path.lo; t <= path.hi; ++t) {
    Rational a = t - path.lo;
    RatVector shift(d, Rational(0));
    shift[k - 1] = a;
    fam.axis_values.push_back(a);
    fam.slices.push_back(translate(fflv_face(mu_at(path, t), k), shift));
  }
  return fam;
}

SliceFamily gz_family(const Weight& lambda, std::size_t k) {
  const std::size_t d = table_dim(lambda.n());
  if (k < 1 || k > d) throw UsageError("slice family needs 1 <= k <= d");
  WeightPath path = mu_path(lambda, k);
  SliceFamily fam{d, k - 1, path.lo, {}, {}};
  for (long t = path.lo; t <= path.hi; ++t) {
    RatVector z = shift_at(lambda, k, Rational(t));
    for (auto& c : z) c = -c;
    fam.axis_values.emplace_back(t);
    fam.slices.push_back(translate(gz_face(mu_at(path, t), k), z));
  }
  return fam;
}

Report check_midpoint_convex(const SliceFamily& fam) {
  Report report;
  report.instance = "midpoint convexity, axis " + std::to_string(fam.axis + 1);
  std::vector<std::vector<RatVector>> verts;
  for (const auto& s : fam.slices) verts.push_back(vertices(s));
  const std::size_t count = fam.slices.size();
  bool all_ok = true;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 2; b < count; b += 2) {
      const std::size_t mid = (a + b) / 2;
      std::string witness;
      for (const auto& p : verts[a]) {
        for (const auto& q : verts[b]) {
          RatVector m(p.size());
          for (std::size_t c = 0; c < p.size(); ++c) m[c] = (p[c] + q[c]) / 2;
          if (!contains(fam.slices[mid], m)) {
            witness = "midpoint " + point_string(m) + " of t=" + std::to_string(fam.t0 + static_cast<long>(a)) +
                      " and t=" + std::to_string(fam.t0 + static_cast<long>(b)) + " not in slice t=" +
                      std::to_string(fam.t0 + static_cast<long>(mid));
            break;
          }
        }
        if (!witness.empty()) break;
      }
      if (!witness.empty()) {
        all_ok = false;
        report.add("pair t=" + std::to_string(fam.t0 + static_cast<long>(a)) + ",t=" +
                       std::to_string(fam.t0 + static_cast<long>(b)),
                   false, witness);
      }
    }
  }
  if (all_ok) report.add("all equal-parity pairs", true);
  return report;
}

Polytope assemble(const SliceFamily& fam) {
  if (fam.slices.empty()) throw DomainError("assemble: empty slice family");
  Report convex = check_midpoint_convex(fam);
  if (!convex.passed()) throw DomainError("assemble: family is not convex: " + convex.checks.front().witness);
  std::vector<RatVector> points;
  for (const auto& s : fam.slices) {
    auto vs = vertices(s);
    points.insert(points.end(), vs.begin(), vs.end());
  }
  if (points.empty()) throw DomainError("assemble: all slices are empty");
  Polytope hull = convex_hull(fam.dim, points);
  for (std::size_t s = 0; s < fam.slices.size(); ++s) {
    if (!equal(slice(hull, fam.axis, fam.axis_values[s]), fam.slices[s])) {
      throw DomainError("assemble: cross-section at t=" + std::to_string(fam.t0 + static_cast<long>(s)) +
                        " differs from its slice");
    }
  }
  return hull;
}

EhrhartComparison compare_ehrhart(const Weight& lambda, std::size_t k, long max_dilation) {
  if (max_dilation < 1) throw UsageError("max dilation must be positive");
  const std::size_t d = table_dim(lambda.n());
  if (k > d) throw UsageError("face index " + std::to_string(k) + " out of range");
  EhrhartComparison out;
  out.report.instance = "ehrhart lambda=" + lambda.to_string() + " k=" + std::to_string(k);
  out.dimension = affine_hull(fflv_face(lambda, k)).dimension;
  const int gz_dimension = affine_hull(gz_face(lambda, k)).dimension;
  out.report.add("face dimensions", out.dimension == gz_dimension,
                 "F_k: " + std::to_string(out.dimension) + ", G_k: " + std::to_string(gz_dimension));

  for (long m = 1; m <= max_dilation; ++m) {
    Weight w = lambda.scaled(m);
    std::uint64_t f = count_lattice_points(fflv_face(w, k));
    std::uint64_t g = count_lattice_points(gz_face(w, k));
    out.fflv_counts.push_back(f);
    out.gz_counts.push_back(g);
    out.report.add("count m=" + std::to_string(m), f == g,
                   "F_k: " + std::to_string(f) + ", G_k: " + std::to_string(g));
  }

  const long needed = out.dimension + 1;
  if (out.dimension >= 0 && max_dilation >= needed) {
    auto fit = [&](const std::vector<std::uint64_t>& counts) {
      std::vector<std::pair<Rational, Rational>> pts;
      for (long m = 1; m <= needed; ++m) pts.emplace_back(Rational(m), Rational(Integer(std::to_string(counts[m - 1]))));
      return interpolate(pts);
    };
    out.fflv_polynomial = fit(out.fflv_counts);
    out.gz_polynomial = fit(out.gz_counts);
    bool same = *out.fflv_polynomial == *out.gz_polynomial;
    out.report.add("ehrhart polynomials", same,
                   "F_k: " + out.fflv_polynomial->to_string('m') + ", G_k: " + out.gz_polynomial->to_string('m'));
    bool constant_one = (*out.fflv_polynomial)(Rational(0)) == 1;
    out.report.add("constant term", constant_one,
                   "value at m=0: " + to_string((*out.fflv_polynomial)(Rational(0))));
    for (long m = needed + 1; m <= max_dilation; ++m) {
      Rational predicted = (*out.fflv_polynomial)(Rational(m));
      bool ok = predicted == Rational(Integer(std::to_string(out.fflv_counts[m - 1])));
      out.report.add("prediction m=" + std::to_string(m), ok, "interpolant gives " + to_string(predicted));
    }
  }
  return out;
}

}  // namespace flagpoly
