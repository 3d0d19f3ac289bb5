#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "flagpoly/report.hpp"

namespace flagpoly::cli {

/// Exit codes: 0 success, 1 failed verification, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worked example values: inequality lists, counts, subspaces and valuation images.
Report run_selftest(std::uint64_t seed);

}  // namespace flagpoly::cli
