#pragma once

#include <stdexcept>

namespace star {

/// Raised when an enumeration or search exceeds its documented size bound.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace star
