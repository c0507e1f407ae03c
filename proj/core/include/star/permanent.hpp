#pragma once

#include <vector>

#include "star/scalar.hpp"

namespace star {

/// Rectangular matrix with rows >= cols, as required by the permanent.
struct RectMatrix {
  std::vector<std::vector<Scalar>> entries;  // row-major

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const {
    return entries.empty() ? 0 : static_cast<int>(entries[0].size());
  }
};

/// Permanent of an r_m x r_n matrix (r_m >= r_n): the sum over all size-r_n
/// row subsets and bijections of column-entry products.  Square blocks of
/// size > 2 are handled by Ryser inclusion-exclusion.
Scalar rectangular_permanent(const RectMatrix& a);

}  // namespace star
