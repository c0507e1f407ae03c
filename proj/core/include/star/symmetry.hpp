#pragma once

#include <utility>
#include <vector>

#include "star/starcore.hpp"

namespace star {

inline constexpr double kEpsOrth = 1e-10;
inline constexpr double kEpsRow = 1e-8;

/// Element of O_n(R), stored densely.
struct OrthogonalMap {
  std::vector<std::vector<double>> g;  // n x n

  int n() const { return static_cast<int>(g.size()); }
  bool is_orthogonal(double eps = kEpsOrth) const;
  std::vector<std::vector<Scalar>> as_rows() const;
};

/// Row permutation induced by a symmetry: row i of U maps onto row perm[i].
struct BranchPermutation {
  std::vector<int> perm;
};

enum class SolidKind { tetrahedron, cube, octahedron, icosahedron, dodecahedron };

/// Unit radius vectors of the regular m-gon, m >= 3.
BranchMatrix regular_polygon_branches(int m);

/// Canonical vertex coordinates of a Platonic solid.  Tetrahedron, cube and
/// octahedron are exact rational; icosahedron and dodecahedron are float.
BranchMatrix platonic_branches(SolidKind kind);

/// The 2m elements of the dihedral group of the regular m-gon.
std::vector<OrthogonalMap> dihedral_group_elements(int m);

/// All orthogonal maps g with Ug = alpha_g U for a permutation alpha_g,
/// found by assigning images to n independent rows and solving for g.
/// The output is canonically sorted and verified to be a group.
/// Bounds: m <= 24, n <= 3.
std::vector<std::pair<OrthogonalMap, BranchPermutation>> branch_symmetries(
    const BranchMatrix& u);

/// True iff sigma(g xi) = sigma(xi) within eps on normalized coefficients.
bool is_invariant_polynomial(const Polynomial& sigma, const OrthogonalMap& g,
                             double eps = kEpsPoly);

}  // namespace star
