#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flagpoly/flagcoords.hpp"
#include "flagpoly/lattice.hpp"
#include "flagpoly/report.hpp"
#include "flagpoly/weight.hpp"

namespace flagpoly {

/// v(s) for every section of the case, in catalog order. Throws DomainError
/// if the catalog contains a zero section.
std::vector<LatticePoint> valuation_images(const SectionBasis& basis);

/// The set of valuation images.
LatticePointSet no_points(const std::string& case_id);

struct NOReport {
  std::string case_id;
  Weight lambda{std::vector<long>{0}};
  std::vector<LatticePoint> points;  // catalog order
  bool distinct = false;
  std::uint64_t expected_count = 0;  // Weyl dimension
  bool matches_fflv = false;         // point set == lattice points of FFLV(lambda)
  std::vector<std::size_t> zero_coordinates;  // 0-based coordinates vanishing on FFLV(lambda)
  Report report;
};

/// Valuation images of the case against FFLV(lambda): distinctness, count,
/// equality with the lattice points and, for d <= 8, equality of the convex
/// hull with FFLV(lambda). The G(3,6) cases also check that e_p + e_q is an
/// image exactly when no Dyck path meets both coordinates p and q.
NOReport verify_case(const std::string& case_id);

/// Products of fundamental sections, k_r factors taken from fund(n, r), have
/// valuations equal to the sum of the factor valuations and lying in
/// FFLV(sum k_r omega_r). Guard: n <= 4 and sum k_r <= 3.
Report minkowski_check(std::size_t n, const std::vector<long>& multiplicities);

}  // namespace flagpoly
