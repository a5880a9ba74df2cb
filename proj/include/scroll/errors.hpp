#pragma once

#include <stdexcept>
#include <string>

namespace scroll {

// Bad argument values (negative genus, zero rank, out-of-range index, ...).
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input violates a mathematical hypothesis of the formula being evaluated.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A combinatorially infeasible configuration (e.g. conic count too large).
struct infeasibility_error : domain_error {
  using domain_error::domain_error;
};

// Enumeration or materialization exceeds the configured desk-scale cap.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checked 64-bit arithmetic overflowed.
struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace scroll
