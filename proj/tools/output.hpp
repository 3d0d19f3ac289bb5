#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "flagpoly/dyck.hpp"
#include "flagpoly/lattice.hpp"
#include "flagpoly/polytope.hpp"
#include "flagpoly/report.hpp"

namespace flagpoly::cli {

using nlohmann::ordered_json;

ordered_json to_json(const Halfspace& h);
ordered_json to_json(const Polytope& p);
ordered_json to_json(const Report& r);
ordered_json to_json(const RatVector& v);
ordered_json to_json(const LatticePoint& p);
ordered_json to_json(const DyckPath& p);

void print_polytope(std::ostream& out, const Polytope& p, const std::vector<std::string>& names);
void print_report(std::ostream& out, const Report& r);
std::string point_text(const LatticePoint& p);
std::string point_text(const RatVector& p);

}  // namespace flagpoly::cli
