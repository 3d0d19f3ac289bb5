#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flagpoly {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Integer point of a lattice polytope. Coordinates stay tiny for every
/// polytope this library builds, so a machine word is plenty.
using LatticePoint = std::vector<std::int64_t>;

/// Builds p/q in canonical form. Throws UsageError when q == 0.
Rational make_rational(const Integer& p, const Integer& q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

RatVector to_rational(const LatticePoint& p);

/// Requires every entry to be integral and to fit in int64.
LatticePoint to_lattice_point(std::span<const Rational> v);

std::int64_t to_int64(const Integer& z);

}  // namespace flagpoly
