#include "output.hpp"

namespace flagpoly::cli {

ordered_json to_json(const RatVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

ordered_json to_json(const LatticePoint& p) {
  ordered_json out = ordered_json::array();
  for (auto x : p) out.push_back(x);
  return out;
}

ordered_json to_json(const Halfspace& h) {
  return ordered_json{{"coeffs", to_json(h.coeffs)}, {"rhs", to_string(h.rhs)}};
}

ordered_json to_json(const Polytope& p) {
  ordered_json hs = ordered_json::array();
  for (const auto& h : p.halfspaces()) hs.push_back(to_json(h));
  return ordered_json{{"dim", p.dim()}, {"halfspaces", hs}};
}

ordered_json to_json(const Report& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
  }
  return ordered_json{{"instance", r.instance}, {"checks", checks}};
}

ordered_json to_json(const DyckPath& p) {
  ordered_json entries = ordered_json::array();
  for (auto [l, m] : p.entries()) entries.push_back({l, m});
  return ordered_json{{"i", p.i}, {"j", p.j}, {"entries", entries}};
}

void print_polytope(std::ostream& out, const Polytope& p, const std::vector<std::string>& names) {
  for (const auto& h : p.halfspaces()) out << format_halfspace(h, names) << "\n";
}

void print_report(std::ostream& out, const Report& r) {
  out << r.instance << "\n";
  for (const auto& c : r.checks) {
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.witness.empty()) out << "  (" << c.witness << ")";
    out << "\n";
  }
}

std::string point_text(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string point_text(const RatVector& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s + ")";
}

}  // namespace flagpoly::cli
