#include "star/symmetry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "star/errors.hpp"

namespace star {

bool OrthogonalMap::is_orthogonal(double eps) const {
  int dim = n();
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double dot = 0.0;
      for (int k = 0; k < dim; ++k) dot += g[k][i] * g[k][j];
      if (std::fabs(dot - (i == j ? 1.0 : 0.0)) > eps) return false;
    }
  }
  return true;
}

std::vector<std::vector<Scalar>> OrthogonalMap::as_rows() const {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : g) {
    std::vector<Scalar> row;
    for (double v : r) row.push_back(Scalar::flt(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

BranchMatrix regular_polygon_branches(int m) {
  if (m < 3) throw std::domain_error("regular_polygon_branches: need m >= 3");
  std::vector<std::vector<double>> rows;
  for (int j = 0; j < m; ++j) {
    double a = 2.0 * std::numbers::pi * j / m;
    rows.push_back({std::cos(a), std::sin(a)});
  }
  return BranchMatrix::from_doubles(rows);
}

BranchMatrix platonic_branches(SolidKind kind) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  switch (kind) {
    case SolidKind::tetrahedron:
      return BranchMatrix::from_ints(
          {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
    case SolidKind::cube: {
      std::vector<std::vector<int>> rows;
      for (int sx : {1, -1})
        for (int sy : {1, -1})
          for (int sz : {1, -1}) rows.push_back({sx, sy, sz});
      return BranchMatrix::from_ints(rows);
    }
    case SolidKind::octahedron:
      return BranchMatrix::from_ints({{1, 0, 0},
                                      {-1, 0, 0},
                                      {0, 1, 0},
                                      {0, -1, 0},
                                      {0, 0, 1},
                                      {0, 0, -1}});
    case SolidKind::icosahedron: {
      std::vector<std::vector<double>> rows;
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          rows.push_back({0.0, double(s1), s2 * phi});
          rows.push_back({double(s1), s2 * phi, 0.0});
          rows.push_back({s2 * phi, 0.0, double(s1)});
        }
      return BranchMatrix::from_doubles(rows);
    }
    case SolidKind::dodecahedron: {
      std::vector<std::vector<double>> rows;
      for (int sx : {1, -1})
        for (int sy : {1, -1})
          for (int sz : {1, -1})
            rows.push_back({double(sx), double(sy), double(sz)});
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          rows.push_back({0.0, s1 / phi, s2 * phi});
          rows.push_back({s1 / phi, s2 * phi, 0.0});
          rows.push_back({s2 * phi, 0.0, s1 / phi});
        }
      return BranchMatrix::from_doubles(rows);
    }
  }
  throw std::domain_error("platonic_branches: unknown solid");
}

std::vector<OrthogonalMap> dihedral_group_elements(int m) {
  if (m < 3) throw std::domain_error("dihedral_group_elements: need m >= 3");
  std::vector<OrthogonalMap> out;
  for (int j = 0; j < m; ++j) {
    double a = 2.0 * std::numbers::pi * j / m;
    out.push_back(OrthogonalMap{{{std::cos(a), -std::sin(a)},
                                 {std::sin(a), std::cos(a)}}});
  }
  for (int j = 0; j < m; ++j) {
    double t = 2.0 * std::numbers::pi * j / m;  // reflection across angle t/2
    out.push_back(OrthogonalMap{{{std::cos(t), std::sin(t)},
                                 {std::sin(t), -std::cos(t)}}});
  }
  return out;
}

namespace {

std::vector<long long> round_key(const OrthogonalMap& g) {
  std::vector<long long> key;
  for (const auto& row : g.g)
    for (double v : row) {
      double r = std::round(v * 1e12);
      if (r == 0) r = 0;  // normalize -0
      key.push_back(static_cast<long long>(r));
    }
  return key;
}

// Matches each transformed row of R onto a row of R; empty on failure.
std::vector<int> induced_permutation(const Eigen::MatrixXd& rows,
                                     const Eigen::MatrixXd& g) {
  int m = static_cast<int>(rows.rows());
  Eigen::MatrixXd mapped = rows * g;
  std::vector<int> perm(m, -1);
  std::vector<bool> used(m, false);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      if ((mapped.row(i) - rows.row(j)).cwiseAbs().maxCoeff() <= kEpsRow) {
        perm[i] = j;
        used[j] = true;
        break;
      }
    }
    if (perm[i] < 0) return {};
  }
  return perm;
}

}  // namespace

std::vector<std::pair<OrthogonalMap, BranchPermutation>> branch_symmetries(
    const BranchMatrix& u) {
  int m = u.m(), n = u.n();
  if (m > 24 || n > 3)
    throw CapacityError("branch_symmetries: search bound m <= 24, n <= 3");

  Eigen::MatrixXd rows(m, n);
  auto d = u.as_doubles();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) rows(i, j) = d[i][j];

  // Greedy selection of n linearly independent rows.
  std::vector<int> base;
  Eigen::MatrixXd sel(0, n);
  for (int i = 0; i < m && static_cast<int>(base.size()) < n; ++i) {
    Eigen::MatrixXd cand(sel.rows() + 1, n);
    cand << sel, rows.row(i);
    if (Eigen::FullPivLU<Eigen::MatrixXd>(cand).rank() ==
        static_cast<int>(cand.rows())) {
      sel = cand;
      base.push_back(i);
    }
  }
  if (static_cast<int>(base.size()) < n)
    throw std::domain_error("branch_symmetries: branch matrix is rank deficient");

  Eigen::MatrixXd b(n, n);
  for (int k = 0; k < n; ++k) b.row(k) = rows.row(base[k]);
  Eigen::FullPivLU<Eigen::MatrixXd> blu(b);

  std::map<std::vector<long long>, std::pair<OrthogonalMap, BranchPermutation>>
      found;
  std::vector<int> targets(n);
  std::vector<bool> taken(m, false);
  std::function<void(int)> assign = [&](int depth) {
    if (depth == n) {
      Eigen::MatrixXd c(n, n);
      for (int k = 0; k < n; ++k) c.row(k) = rows.row(targets[k]);
      Eigen::MatrixXd g = blu.solve(c);
      OrthogonalMap om;
      om.g.resize(n, std::vector<double>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) om.g[i][j] = g(i, j);
      if (!om.is_orthogonal()) return;
      std::vector<int> perm = induced_permutation(rows, g);
      if (perm.empty()) return;
      found.emplace(round_key(om),
                    std::make_pair(om, BranchPermutation{perm}));
      return;
    }
    for (int t = 0; t < m; ++t) {
      if (taken[t]) continue;
      taken[t] = true;
      targets[depth] = t;
      assign(depth + 1);
      taken[t] = false;
    }
  };
  assign(0);

  // Group sanity: closed under composition and transpose.
  for (const auto& [ka, va] : found) {
    OrthogonalMap inv;
    inv.g.resize(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv.g[i][j] = va.first.g[j][i];
    if (!found.count(round_key(inv)))
      throw std::logic_error("branch_symmetries: set not closed under inverse");
    for (const auto& [kb, vb] : found) {
      OrthogonalMap prod;
      prod.g.resize(n, std::vector<double>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int k = 0; k < n; ++k) s += va.first.g[i][k] * vb.first.g[k][j];
          prod.g[i][j] = s;
        }
      if (!found.count(round_key(prod)))
        throw std::logic_error(
            "branch_symmetries: set not closed under composition");
    }
  }

  std::vector<std::pair<OrthogonalMap, BranchPermutation>> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));
  return out;  // map iteration = lexicographic on rounded entries
}

bool is_invariant_polynomial(const Polynomial& sigma, const OrthogonalMap& g,
                             double eps) {
  if (sigma.var_count() != g.n())
    throw std::domain_error("is_invariant_polynomial: dimension mismatch");
  Polynomial f = sigma.to_float();
  Polynomial mapped = substitute_linear_forms(f, g.as_rows());
  return approx_equal(mapped, f, eps);
}

}  // namespace star
