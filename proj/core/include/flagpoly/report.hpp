#pragma once

#include <string>
#include <vector>

namespace flagpoly {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass unless there is something worth showing
};

/// Named pass/fail verdicts for one verification run.
struct Report {
  std::string instance;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string witness = {}) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
  void append(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
  }
  bool passed() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += c.pass ? 0 : 1;
    return f;
  }
};

}  // namespace flagpoly
