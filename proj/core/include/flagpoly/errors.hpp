#pragma once

#include <stdexcept>
#include <string>

namespace flagpoly {

/// Caller passed arguments that violate an operation's preconditions
/// (dimension mismatch, index out of range, non-dominant weight, ...).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// The arguments are well-formed but the operation is undefined on them
/// (zero polynomial valuation, facets of an empty polytope, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A size guard was exceeded (vertex enumeration dimension, brute-force box).
class UnsupportedSize : public std::length_error {
 public:
  explicit UnsupportedSize(const std::string& what) : std::length_error(what) {}
};

}  // namespace flagpoly
