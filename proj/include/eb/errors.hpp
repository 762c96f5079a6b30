#pragma once

#include <stdexcept>
#include <string>

namespace eb {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checked integer arithmetic exceeded the int64 budget.
struct overflow_error : error {
  using error::error;
};

// Operands disagree on prime, rank or base level.
struct shape_mismatch : error {
  using error::error;
};

// Operation defined only for a specific signature family.
struct family_error : error {
  using error::error;
};

// p = 2 far sets need rank > 3.
struct rank_too_small : error {
  using error::error;
};

struct precondition_error : error {
  using error::error;
};

struct cap_exceeded : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

struct arity_mismatch : error {
  using error::error;
};

struct not_involution : error {
  using error::error;
};

struct not_in_base : error {
  using error::error;
};

struct not_stabilized : error {
  using error::error;
};

// A fractality witness failed its own verification; indicates a bug, not
// a mathematical obstruction.
struct construction_failed : error {
  using error::error;
};

}  // namespace eb
