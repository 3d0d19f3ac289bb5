#include "commands.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "flagpoly/errors.hpp"
#include "flagpoly/fflv.hpp"
#include "flagpoly/fiber.hpp"
#include "flagpoly/flagcoords.hpp"
#include "flagpoly/gz.hpp"
#include "flagpoly/novaluation.hpp"
#include "flagpoly/replib.hpp"
#include "flagpoly/table_index.hpp"
#include "output.hpp"

namespace flagpoly::cli {
namespace {

struct Options {
  std::string lambda;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::optional<long> t;
  std::string case_id;
  std::optional<long> max_dilation;
  std::string polytope = "fflv";
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
};

Weight weight_of(const Options& o) {
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  return Weight::parse(o.lambda);
}

bool is_gz(const Options& o) {
  if (o.polytope == "fflv") return false;
  if (o.polytope == "gz") return true;
  throw UsageError("--polytope must be fflv or gz");
}

std::vector<std::string> names_for(const Options& o, std::size_t n) {
  return coordinate_names(n, is_gz(o) ? "z" : "u");
}

Polytope chosen(const Options& o, const Weight& w) {
  const std::size_t k = o.k.value_or(0);
  return is_gz(o) ? gz_face(w, k) : fflv_face(w, k);
}

int emit_report(const Report& r, const Options& o, std::ostream& out) {
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    print_report(out, r);
  }
  return r.passed() ? 0 : 1;
}

int cmd_polytope(const Options& o, bool gz, std::ostream& out) {
  Weight w = weight_of(o);
  Polytope p = (gz ? gz_polytope(w) : fflv_polytope(w)).canonical();
  if (o.json) {
    out << to_json(p).dump(2) << "\n";
  } else {
    out << (gz ? "GZ" : "FFLV") << w.to_string() << ": " << p.halfspaces().size() << " inequalities\n";
    print_polytope(out, p, coordinate_names(w.n(), gz ? "z" : "u"));
  }
  return 0;
}

int cmd_face(const Options& o, std::ostream& out) {
  Weight w = weight_of(o);
  if (!o.k) throw UsageError("--k is required");
  Polytope p = chosen(o, w).canonical();
  if (o.json) {
    out << to_json(p).dump(2) << "\n";
  } else {
    out << (is_gz(o) ? "G_" : "F_") << *o.k << w.to_string() << "\n";
    print_polytope(out, p, names_for(o, w.n()));
  }
  return 0;
}

int cmd_points(const Options& o, std::ostream& out) {
  Weight w = weight_of(o);
  LatticePointSet pts = lattice_points(chosen(o, w));
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts) arr.push_back(to_json(p));
    out << ordered_json{{"count", pts.size()}, {"points", arr}}.dump(2) << "\n";
  } else {
    out << pts.size() << " lattice points\n";
    for (const auto& p : pts) out << point_text(p) << "\n";
  }
  return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
  Weight w = weight_of(o);
  std::uint64_t c = count_lattice_points(chosen(o, w));
  if (o.json) {
    out << ordered_json{{"count", c}}.dump(2) << "\n";
  } else {
    out << c << "\n";
  }
  return 0;
}

int cmd_dim(const Options& o, std::ostream& out) {
  Weight w = weight_of(o);
  std::string d = to_string(weyl_dim(w));
  if (o.json) {
    out << ordered_json{{"lambda", w.entries()}, {"weyl_dim", d}}.dump(2) << "\n";
  } else {
    out << d << "\n";
  }
  return 0;
}

int cmd_dyck(const Options& o, std::ostream& out) {
  std::size_t n = o.n;
  if (n == 0 && !o.lambda.empty()) n = weight_of(o).n();
  if (n < 2) throw UsageError("--n (at least 2) is required");
  auto paths = all_dyck_paths(n);
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : paths) arr.push_back(to_json(p));
    out << arr.dump(2) << "\n";
  } else {
    out << paths.size() << " Dyck paths\n";
    for (const auto& p : paths) out << "lambda_" << p.i << " -> lambda_" << p.j << ": " << p.to_string() << "\n";
  }
  return 0;
}

int cmd_facets(const Options& o, std::ostream& out) {
  Weight w = weight_of(o);
  FacetDescription f = irredundant(chosen(o, w));
  auto names = names_for(o, w.n());
  if (o.json) {
    ordered_json eq = ordered_json::array(), fa = ordered_json::array();
    for (const auto& h : f.equations) eq.push_back(to_json(h));
    for (const auto& h : f.facets) fa.push_back(to_json(h));
    out << ordered_json{{"dimension", f.dimension}, {"equations", eq}, {"facets", fa}}.dump(2) << "\n";
  } else {
    out << "dimension " << f.dimension << ", " << f.facets.size() << " facets\n";
    for (const auto& h : f.equations) out << format_halfspace(h, names, "=") << "\n";
    for (const auto& h : f.facets) out << format_halfspace(h, names) << "\n";
  }
  return 0;
}

int cmd_vertices(const Options& o, std::ostream& out) {
  Weight w = weight_of(o);
  auto vs = vertices(chosen(o, w));
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) arr.push_back(to_json(v));
    out << ordered_json{{"count", vs.size()}, {"vertices", arr}}.dump(2) << "\n";
  } else {
    out << vs.size() << " vertices\n";
    for (const auto& v : vs) out << point_text(v) << "\n";
  }
  return 0;
}

int cmd_slice(const Options& o, std::ostream& out) {
  Weight w = weight_of(o);
  if (!o.k) throw UsageError("--k is required");
  const std::size_t k = *o.k;
  if (o.t) {
    WeightPath path = mu_path(w, k);
    mu_at(path, *o.t);  // domain check
    Polytope outer = is_gz(o) ? gz_face(w, k - 1) : fflv_face(w, k - 1);
    Rational value = is_gz(o) ? Rational(*o.t) : Rational(*o.t - path.lo);
    Polytope cut = slice(outer, k - 1, value).canonical();
    if (o.json) {
      out << to_json(cut).dump(2) << "\n";
    } else {
      print_polytope(out, cut, names_for(o, w.n()));
    }
    return 0;
  }
  return emit_report(is_gz(o) ? check_slice_lemma_gz(w, k) : check_slice_lemma_fflv(w, k), o, out);
}

int cmd_assemble(const Options& o, std::ostream& out) {
  Weight w = weight_of(o);
  if (!o.k) throw UsageError("--k is required");
  const std::size_t k = *o.k;
  SliceFamily fam = is_gz(o) ? gz_family(w, k) : fflv_family(w, k);
  Report r = check_midpoint_convex(fam);
  r.instance = o.polytope + " family lambda=" + w.to_string() + " k=" + std::to_string(k);
  if (r.passed()) {
    Polytope hull = assemble(fam);
    Polytope face = is_gz(o) ? gz_face(w, k - 1) : fflv_face(w, k - 1);
    r.add("assembled hull equals face k-1", equal(hull, face));
  }
  return emit_report(r, o, out);
}

int cmd_ehrhart(const Options& o, std::ostream& out) {
  Weight w = weight_of(o);
  const std::size_t k = o.k.value_or(0);
  long m = o.max_dilation.value_or(affine_hull(fflv_face(w, k)).dimension + 1);
  EhrhartComparison e = compare_ehrhart(w, k, m);
  if (o.json) {
    ordered_json j = to_json(e.report);
    j["dimension"] = e.dimension;
    j["fflv_counts"] = e.fflv_counts;
    j["gz_counts"] = e.gz_counts;
    if (e.fflv_polynomial) j["fflv_polynomial"] = to_json(e.fflv_polynomial->coefficients());
    if (e.gz_polynomial) j["gz_polynomial"] = to_json(e.gz_polynomial->coefficients());
    out << j.dump(2) << "\n";
  } else {
    print_report(out, e.report);
    if (e.fflv_polynomial) out << "Ehrhart polynomial: " << e.fflv_polynomial->to_string('m') << "\n";
  }
  return e.report.passed() ? 0 : 1;
}

int cmd_compare(const Options& o, std::ostream& out) {
  Weight w = weight_of(o);
  long maxm = o.max_dilation.value_or(1);
  if (maxm < 1) throw UsageError("--max-dilation must be positive");
  Report r;
  r.instance = "compare lambda=" + w.to_string();
  ordered_json rows = ordered_json::array();
  for (long m = 1; m <= maxm; ++m) {
    Weight wm = w.scaled(m);
    std::uint64_t f = count_lattice_points(fflv_polytope(wm));
    std::uint64_t g = count_lattice_points(gz_polytope(wm));
    std::string weyl = to_string(weyl_dim(wm));
    bool ok = std::to_string(f) == weyl && std::to_string(g) == weyl;
    r.add("m=" + std::to_string(m), ok,
          "FFLV " + std::to_string(f) + ", GZ " + std::to_string(g) + ", Weyl " + weyl);
    rows.push_back({{"m", m}, {"fflv", f}, {"gz", g}, {"weyl", weyl}});
  }
  FacetDescription ff = irredundant(fflv_polytope(w));
  FacetDescription gf = irredundant(gz_polytope(w));
  if (o.json) {
    ordered_json j = to_json(r);
    j["counts"] = rows;
    j["fflv_facets"] = ff.facets.size();
    j["gz_facets"] = gf.facets.size();
    out << j.dump(2) << "\n";
  } else {
    print_report(out, r);
    out << "facets: FFLV " << ff.facets.size() << ", GZ " << gf.facets.size() << "\n";
  }
  return r.passed() ? 0 : 1;
}

int cmd_nobody(const Options& o, std::ostream& out) {
  if (o.case_id.empty()) throw UsageError("--case is required");
  NOReport r = verify_case(o.case_id);
  if (o.json) {
    ordered_json j = to_json(r.report);
    ordered_json pts = ordered_json::array();
    for (const auto& p : r.points) pts.push_back(to_json(p));
    j["case"] = r.case_id;
    j["lambda"] = r.lambda.entries();
    j["points"] = pts;
    j["expected_count"] = r.expected_count;
    j["zero_coordinates"] = r.zero_coordinates;
    out << j.dump(2) << "\n";
  } else {
    print_report(out, r.report);
    out << "valuation images:\n";
    for (const auto& p : r.points) out << "  " << point_text(p) << "\n";
  }
  return r.report.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"FFLV and Gelfand-Zetlin polytopes, slice lemmas and Newton-Okounkov computations"};
  app.require_subcommand(1);
  Options o;

  auto add_lambda = [&](CLI::App* c) { c->add_option("--lambda", o.lambda, "dominant weight, e.g. 2,1,0"); };
  auto add_k = [&](CLI::App* c) { c->add_option("--k", o.k, "flat table index (0 = whole polytope)"); };
  auto add_poly = [&](CLI::App* c) { c->add_option("--polytope", o.polytope, "fflv or gz"); };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };

  struct Verb {
    const char* name;
    const char* help;
    std::function<int(std::ostream&)> fn;
  };
  std::vector<Verb> verbs = {
      {"fflv", "FFLV inequalities", [&](std::ostream& s) { return cmd_polytope(o, false, s); }},
      {"gz", "Gelfand-Zetlin inequalities", [&](std::ostream& s) { return cmd_polytope(o, true, s); }},
      {"points", "lattice points", [&](std::ostream& s) { return cmd_points(o, s); }},
      {"count", "number of lattice points", [&](std::ostream& s) { return cmd_count(o, s); }},
      {"dim", "Weyl dimension", [&](std::ostream& s) { return cmd_dim(o, s); }},
      {"ehrhart", "Ehrhart comparison of F_k and G_k", [&](std::ostream& s) { return cmd_ehrhart(o, s); }},
      {"dyck", "Dyck paths", [&](std::ostream& s) { return cmd_dyck(o, s); }},
      {"facets", "irredundant facets", [&](std::ostream& s) { return cmd_facets(o, s); }},
      {"vertices", "vertices", [&](std::ostream& s) { return cmd_vertices(o, s); }},
      {"face", "inequalities of F_k or G_k", [&](std::ostream& s) { return cmd_face(o, s); }},
      {"slice", "slice lemma check, or one slice with --t", [&](std::ostream& s) { return cmd_slice(o, s); }},
      {"assemble", "midpoint convexity and reassembly of a slice family", [&](std::ostream& s) { return cmd_assemble(o, s); }},
      {"compare", "FFLV/GZ/Weyl counts and facet counts", [&](std::ostream& s) { return cmd_compare(o, s); }},
      {"nobody", "valuation images of a catalog case", [&](std::ostream& s) { return cmd_nobody(o, s); }},
      {"selftest", "check the worked example values",
       [&](std::ostream& s) { return emit_report(run_selftest(o.seed), o, s); }},
  };
  std::vector<std::pair<CLI::App*, const Verb*>> subs;
  for (const auto& v : verbs) {
    CLI::App* c = app.add_subcommand(v.name, v.help);
    add_lambda(c);
    add_k(c);
    add_poly(c);
    add_json(c);
    c->add_option("--n", o.n, "rank n");
    c->add_option("--t", o.t, "slice parameter");
    c->add_option("--case", o.case_id, "catalog case: gl3_210, g24_1100, g36_111000, g36_display, fund_<n>_<i>");
    c->add_option("--max-dilation", o.max_dilation, "largest dilation factor");
    c->add_option("--seed", o.seed, "seed for randomized checks");
    subs.emplace_back(c, &v);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    for (auto& [c, v] : subs) {
      if (c->parsed()) return v->fn(out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedSize& e) {
    err << "unsupported size: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace flagpoly::cli
