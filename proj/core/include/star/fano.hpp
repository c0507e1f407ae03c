#pragma once

#include <utility>
#include <vector>

#include "star/starcore.hpp"

namespace star {

/// Perfect matching of {1..2n}: n disjoint pairs, each stored (a, b) with
/// a < b, listed with smallest unmatched element first.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
};

/// Reduced column-echelon representative of the right-GL_n orbit of a
/// branch matrix.
struct SubspaceCanon {
  BranchMatrix matrix;
};

enum class CayleyLineKind { singular, smooth };

/// One of the 9 real lines on the Cayley nodal cubic {e_3 = 0}.
struct CayleyLine {
  CayleyLineKind kind;
  std::pair<int, int> label;  // (i,j) of L_ij, or the first pair of M_kl
  Matching matching;          // populated for smooth lines
  BranchMatrix basis;         // 4 x 2 span
};

/// Polynomial system cutting out the Fano chart U = [I_n ; W]: one equation
/// in the entries of W per degree-(m-1) monomial of xi.
struct ChartSystem {
  int m = 0;
  int n = 0;
  int unknowns = 0;                  // (m-n) * n entries of W, row-major
  std::vector<Monomial> xi_monomials;
  std::vector<Polynomial> equations;  // exact, in the unknowns
};

struct SolutionCluster {
  std::vector<double> point;
  double residual = 0.0;
  int basin_count = 0;
};

/// All perfect matchings of {1..m}, count (m-1)!!.  m even, m <= 16.
std::vector<Matching> perfect_matchings(int m);

/// Paired branch matrix of a matching: for the t-th pair (a, b), row a is
/// +e_t and row b is -e_t.  Exact rational.
BranchMatrix matching_to_branch_matrix(const Matching& mt);

/// True iff p(U xi) vanishes identically, i.e. Im(U) lies in V(p).
bool subspace_in_hypersurface(const BranchMatrix& u, const Polynomial& p,
                              double eps = kEpsPoly);

/// Reduced column-echelon form; invariant under right multiplication by
/// invertible matrices.  Requires rank n.
SubspaceCanon canonical_subspace(const BranchMatrix& u);

/// Canonical forms of all matching-derived subspaces for m = 2n, verified
/// pairwise distinct and contained in V(e_{m-1}).  n <= 8.
std::vector<SubspaceCanon> enumerate_isolated_subspaces(int n);

/// The 6 singular and 3 smooth lines of the Cayley cubic, each verified to
/// lie in V(e_3).
std::vector<CayleyLine> cayley_lines();

ChartSystem chart_equations(int m, int n);

/// Multi-start damped Gauss-Newton on the least-squares residual of a chart
/// system.  Deterministic for a fixed seed; clusters converged points with
/// radius 1e-6.
std::vector<SolutionCluster> solve_chart_newton(const ChartSystem& cs,
                                                int starts,
                                                unsigned int seed);

/// Reassembles [I_n ; W] from a chart solution point.
BranchMatrix chart_point_to_matrix(const ChartSystem& cs,
                                   const std::vector<double>& point);

}  // namespace star
