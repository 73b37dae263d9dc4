#pragma once

#include <stdexcept>
#include <string>

namespace resistor {

/// Graph is not connected over positive-conductance edges (or became so).
struct disconnected_error : std::domain_error {
  explicit disconnected_error(const std::string& what) : std::domain_error(what) {}
};

/// A rewrite or formula does not apply to the given site.
struct not_applicable : std::invalid_argument {
  explicit not_applicable(const std::string& what) : std::invalid_argument(what) {}
};

/// Enumeration or probe exceeded its configured budget.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact singularity (zero pivot, vanishing denominator) where a value was required.
struct singular_error : std::runtime_error {
  explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

/// Float-mode numerical failure (eigensolver, non-convergence).
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Caller-supplied structure (orbit partition, separation) is inconsistent.
struct inconsistency_error : std::runtime_error {
  explicit inconsistency_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace resistor
