#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "star/polynomial.hpp"

namespace star {

/// Default coefficient tolerance for float-mode symbol comparisons.
inline constexpr double kEpsPoly = 1e-9;

/// m x n matrix whose rows are the branch vectors u_1..u_m.
struct BranchMatrix {
  std::vector<std::vector<Scalar>> rows;

  int m() const { return static_cast<int>(rows.size()); }
  int n() const {
    return rows.empty() ? 0 : static_cast<int>(rows[0].size());
  }
  ScalarTag tag() const {
    return rows.empty() || rows[0].empty() ? ScalarTag::exact
                                           : rows[0][0].tag();
  }

  static BranchMatrix from_doubles(
      const std::vector<std::vector<double>>& rows);
  static BranchMatrix from_ints(const std::vector<std::vector<int>>& rows);

  std::vector<std::vector<double>> as_doubles() const;
  BranchMatrix to_float() const;

  bool has_zero_row() const;
};

/// Total symbol (p, U) of a star transform.  `order` is present iff p is
/// homogeneous.  Mixed tags are promoted to float at construction.
struct StarSymbol {
  Polynomial p;
  BranchMatrix branches;
  std::optional<int> order;

  StarSymbol(Polynomial poly, BranchMatrix u);
};

enum class DualPath { substitution, permanent };

/// Symbol of the dual differential operator: sigma(xi) = p*(U xi).
struct DualSymbol {
  Polynomial sigma;
  StarSymbol source;
  DualPath path;
};

enum class SymbolClass {
  identically_zero,
  elliptic,
  non_elliptic_nonzero,
  undetermined,
};

/// Dual symbol via reciprocal + linear-form substitution.
DualSymbol dual_symbol(const StarSymbol& s);

/// Dual symbol of an elementary star (p = e_k) built coefficient-by-
/// coefficient from rectangular permanents of column-repeated blocks,
/// normalized by 1/(k_1! ... k_n!).
DualSymbol dual_symbol_permanent_path(const StarSymbol& s);

/// Injectivity criterion: the dual symbol is not identically zero.
/// Realizability of the star is the caller's responsibility.
bool is_injective(const StarSymbol& s, double eps = kEpsPoly);

/// If sigma = C * (xi_1^2 + ... + xi_n^2)^j, returns (C, j).
std::optional<std::pair<Scalar, int>> laplacian_power_form(
    const DualSymbol& d, double eps = kEpsPoly);

SymbolClass classify_symbol(const DualSymbol& d, double eps = kEpsPoly);

}  // namespace star
