#pragma once

#include <stdexcept>
#include <string>

namespace qcube {

/// Thrown when an operation receives arguments outside its documented domain.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal cross-check fails, i.e. when a quantity that is
/// guaranteed by the theory does not hold numerically. Usually indicates
/// that an inadmissible input slipped past a tolerance check.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qcube
