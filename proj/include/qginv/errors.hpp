#pragma once

#include <stdexcept>

namespace qginv {

/// Malformed or out-of-range input (CLI exit code 2).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numerical procedure failed to produce a trustworthy result (CLI exit code 3).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qginv
