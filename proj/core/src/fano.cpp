#include "star/fano.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "star/errors.hpp"

namespace star {

std::vector<Matching> perfect_matchings(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::domain_error("perfect_matchings: m must be even and >= 2");
  if (m > 16) throw CapacityError("perfect_matchings: m <= 16");

  std::vector<Matching> out;
  std::vector<bool> used(m + 1, false);
  std::vector<std::pair<int, int>> current;
  std::function<void()> rec = [&]() {
    int a = 0;
    for (int i = 1; i <= m; ++i)
      if (!used[i]) {
        a = i;
        break;
      }
    if (a == 0) {
      out.push_back(Matching{current});
      return;
    }
    used[a] = true;
    for (int b = a + 1; b <= m; ++b) {
      if (used[b]) continue;
      used[b] = true;
      current.emplace_back(a, b);
      rec();
      current.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  rec();
  return out;
}

BranchMatrix matching_to_branch_matrix(const Matching& mt) {
  int n = static_cast<int>(mt.pairs.size());
  int m = 2 * n;
  std::vector<bool> seen(m + 1, false);
  for (const auto& [a, b] : mt.pairs) {
    if (a < 1 || b < 1 || a > m || b > m || a >= b || seen[a] || seen[b])
      throw std::domain_error("matching_to_branch_matrix: invalid matching");
    seen[a] = seen[b] = true;
  }
  BranchMatrix u;
  u.rows.assign(m, std::vector<Scalar>(n, Scalar::rat(0)));
  for (int t = 0; t < n; ++t) {
    const auto& [a, b] = mt.pairs[t];
    u.rows[a - 1][t] = Scalar::rat(1);
    u.rows[b - 1][t] = Scalar::rat(-1);
  }
  return u;
}

bool subspace_in_hypersurface(const BranchMatrix& u, const Polynomial& p,
                              double eps) {
  if (p.var_count() != u.m())
    throw std::domain_error("subspace_in_hypersurface: dimension mismatch");
  BranchMatrix mat = u;
  Polynomial poly = p;
  if (poly.tag() != mat.tag()) {
    poly = poly.to_float();
    mat = mat.to_float();
  }
  return approx_zero(substitute_linear_forms(poly, mat.rows), eps);
}

SubspaceCanon canonical_subspace(const BranchMatrix& u) {
  int m = u.m(), n = u.n();
  if (u.tag() == ScalarTag::exact) {
    // Column reduction over the rationals: RREF of the transpose.
    std::vector<std::vector<Rational>> t(n, std::vector<Rational>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) t[j][i] = u.rows[i][j].rational();
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
      int pivot = -1;
      for (int r = row; r < n; ++r)
        if (t[r][col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(t[pivot], t[row]);
      Rational pv = t[row][col];
      for (int c = 0; c < m; ++c) t[row][c] /= pv;
      for (int r = 0; r < n; ++r) {
        if (r == row || t[r][col] == 0) continue;
        Rational f = t[r][col];
        for (int c = 0; c < m; ++c) t[r][c] -= f * t[row][c];
      }
      ++row;
    }
    if (row < n)
      throw std::domain_error("canonical_subspace: rank deficient matrix");
    BranchMatrix out;
    out.rows.assign(m, std::vector<Scalar>(n, Scalar::rat(0)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) out.rows[i][j] = Scalar(t[j][i]);
    return SubspaceCanon{out};
  }

  const double pivot_tol = 1e-10;
  auto d = u.as_doubles();
  std::vector<std::vector<double>> t(n, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) t[j][i] = d[i][j];
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int pivot = -1;
    double best = pivot_tol;
    for (int r = row; r < n; ++r)
      if (std::fabs(t[r][col]) > best) {
        best = std::fabs(t[r][col]);
        pivot = r;
      }
    if (pivot < 0) continue;
    std::swap(t[pivot], t[row]);
    double pv = t[row][col];
    for (int c = 0; c < m; ++c) t[row][c] /= pv;
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      double f = t[r][col];
      if (f == 0.0) continue;
      for (int c = 0; c < m; ++c) t[r][c] -= f * t[row][c];
    }
    ++row;
  }
  if (row < n)
    throw std::domain_error("canonical_subspace: rank deficient matrix");
  std::vector<std::vector<double>> out(m, std::vector<double>(n, 0.0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = t[j][i];
  return SubspaceCanon{BranchMatrix::from_doubles(out)};
}

std::vector<SubspaceCanon> enumerate_isolated_subspaces(int n) {
  if (n < 1) throw std::domain_error("enumerate_isolated_subspaces: n >= 1");
  if (n > 8) throw CapacityError("enumerate_isolated_subspaces: n <= 8");
  int m = 2 * n;
  Polynomial hyper = elementary_symmetric(m - 1, m);
  std::vector<SubspaceCanon> out;
  for (const Matching& mt : perfect_matchings(m)) {
    SubspaceCanon canon = canonical_subspace(matching_to_branch_matrix(mt));
    if (!subspace_in_hypersurface(canon.matrix, hyper))
      throw std::logic_error(
          "enumerate_isolated_subspaces: subspace escapes V(e_{m-1})");
    for (const SubspaceCanon& prev : out)
      if (prev.matrix.rows == canon.matrix.rows)
        throw std::logic_error(
            "enumerate_isolated_subspaces: duplicate canonical form");
    out.push_back(std::move(canon));
  }
  return out;
}

std::vector<CayleyLine> cayley_lines() {
  Polynomial cubic = elementary_symmetric(3, 4);
  std::vector<CayleyLine> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      // span of the coordinate plane {x_i = x_j = 0}
      std::vector<int> free;
      for (int k = 1; k <= 4; ++k)
        if (k != i && k != j) free.push_back(k);
      BranchMatrix basis;
      basis.rows.assign(4, std::vector<Scalar>(2, Scalar::rat(0)));
      basis.rows[free[0] - 1][0] = Scalar::rat(1);
      basis.rows[free[1] - 1][1] = Scalar::rat(1);
      out.push_back(CayleyLine{CayleyLineKind::singular, {i, j}, {}, basis});
    }
  }
  for (const Matching& mt : perfect_matchings(4)) {
    BranchMatrix basis = matching_to_branch_matrix(mt);
    out.push_back(
        CayleyLine{CayleyLineKind::smooth, mt.pairs[0], mt, basis});
  }
  for (const CayleyLine& line : out)
    if (!subspace_in_hypersurface(line.basis, cubic))
      throw std::logic_error("cayley_lines: line escapes the cubic");
  return out;
}

ChartSystem chart_equations(int m, int n) {
  if (m <= n || n < 1)
    throw std::domain_error("chart_equations: need m > n >= 1");
  int k = (m - n) * n;
  int vars = k + n;  // W entries first, then xi

  // y_i as polynomials in (w, xi)
  std::vector<Polynomial> y;
  for (int i = 0; i < m; ++i) {
    Polynomial yi(vars, ScalarTag::exact);
    for (int j = 0; j < n; ++j) {
      Monomial mo{std::vector<int>(vars, 0)};
      mo.exp[k + j] = 1;
      if (i < n) {
        if (i == j) yi.add_term(mo, Scalar::rat(1));
      } else {
        mo.exp[(i - n) * n + j] = 1;
        yi.add_term(mo, Scalar::rat(1));
      }
    }
    y.push_back(std::move(yi));
  }

  // e_{m-1}(y) = sum_i prod_{j != i} y_j via prefix/suffix products.
  std::vector<Polynomial> pre(m + 1, Polynomial::constant(vars, Scalar::rat(1)));
  std::vector<Polynomial> suf(m + 2, Polynomial::constant(vars, Scalar::rat(1)));
  for (int i = 1; i <= m; ++i) pre[i] = pre[i - 1] * y[i - 1];
  for (int i = m; i >= 1; --i) suf[i] = suf[i + 1] * y[i - 1];
  Polynomial expanded(vars, ScalarTag::exact);
  for (int i = 1; i <= m; ++i) expanded = expanded + pre[i - 1] * suf[i + 1];

  // Split each term into its xi part and W part.
  std::map<Monomial, Polynomial, GradedLex> by_xi;
  for (const auto& [mono, c] : expanded.terms()) {
    Monomial xi_part{std::vector<int>(n, 0)};
    Monomial w_part{std::vector<int>(k, 0)};
    for (int j = 0; j < n; ++j) xi_part.exp[j] = mono.exp[k + j];
    for (int j = 0; j < k; ++j) w_part.exp[j] = mono.exp[j];
    auto it = by_xi.find(xi_part);
    if (it == by_xi.end())
      it = by_xi.emplace(xi_part, Polynomial(k, ScalarTag::exact)).first;
    it->second.add_term(w_part, c);
  }

  ChartSystem cs;
  cs.m = m;
  cs.n = n;
  cs.unknowns = k;
  // one equation per degree-(m-1) xi monomial, zero where no term survived
  std::function<void(std::vector<int>&, int, int)> emit =
      [&](std::vector<int>& exp, int pos, int rem) {
        if (pos == n - 1) {
          exp[pos] = rem;
          Monomial xi{exp};
          cs.xi_monomials.push_back(xi);
          auto it = by_xi.find(xi);
          cs.equations.push_back(it == by_xi.end()
                                     ? Polynomial(k, ScalarTag::exact)
                                     : it->second);
          return;
        }
        for (int v = 0; v <= rem; ++v) {
          exp[pos] = v;
          emit(exp, pos + 1, rem - v);
        }
      };
  std::vector<int> exp(n, 0);
  emit(exp, 0, m - 1);
  return cs;
}

BranchMatrix chart_point_to_matrix(const ChartSystem& cs,
                                   const std::vector<double>& point) {
  if (static_cast<int>(point.size()) != cs.unknowns)
    throw std::domain_error("chart_point_to_matrix: wrong point length");
  std::vector<std::vector<double>> rows(cs.m, std::vector<double>(cs.n, 0.0));
  for (int i = 0; i < cs.n; ++i) rows[i][i] = 1.0;
  for (int i = cs.n; i < cs.m; ++i)
    for (int j = 0; j < cs.n; ++j) rows[i][j] = point[(i - cs.n) * cs.n + j];
  return BranchMatrix::from_doubles(rows);
}

std::vector<SolutionCluster> solve_chart_newton(const ChartSystem& cs,
                                                int starts,
                                                unsigned int seed) {
  int k = cs.unknowns;
  if (k > 12) throw CapacityError("solve_chart_newton: unknown count <= 12");
  int neq = static_cast<int>(cs.equations.size());

  std::vector<Polynomial> eqs;
  std::vector<std::vector<Polynomial>> jac;
  for (const Polynomial& e : cs.equations) {
    Polynomial f = e.to_float();
    std::vector<Polynomial> grad;
    for (int j = 0; j < k; ++j) grad.push_back(f.derivative(j));
    eqs.push_back(std::move(f));
    jac.push_back(std::move(grad));
  }

  auto residual = [&](const std::vector<double>& x, Eigen::VectorXd& f) {
    for (int i = 0; i < neq; ++i) f(i) = eqs[i].evaluate_double(x);
    return f.norm();
  };

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);

  std::vector<SolutionCluster> clusters;
  Eigen::VectorXd f(neq), ftrial(neq);
  for (int s = 0; s < starts; ++s) {
    std::vector<double> x(k);
    for (double& v : x) v = box(rng);

    double lambda = 1e-3;
    double fnorm = residual(x, f);
    bool converged = false;
    for (int iter = 0; iter < 300; ++iter) {
      if (fnorm < 1e-14) {
        converged = true;
        break;
      }
      Eigen::MatrixXd jmat(neq, k);
      for (int i = 0; i < neq; ++i)
        for (int j = 0; j < k; ++j) jmat(i, j) = jac[i][j].evaluate_double(x);
      Eigen::MatrixXd a = jmat.transpose() * jmat;
      a.diagonal().array() += lambda;
      Eigen::VectorXd step = a.ldlt().solve(-jmat.transpose() * f);
      std::vector<double> xt(k);
      for (int j = 0; j < k; ++j) xt[j] = x[j] + step(j);
      double ftn = residual(xt, ftrial);
      if (ftn < fnorm) {
        x = xt;
        f = ftrial;
        fnorm = ftn;
        lambda = std::max(lambda * 0.3, 1e-14);
      } else {
        lambda *= 10.0;
        if (lambda > 1e12) break;
      }
    }
    if (!converged && fnorm >= 1e-12) continue;

    bool matched = false;
    for (SolutionCluster& c : clusters) {
      double d2 = 0.0;
      for (int j = 0; j < k; ++j) {
        double dd = c.point[j] - x[j];
        d2 += dd * dd;
      }
      if (std::sqrt(d2) <= 1e-6) {
        ++c.basin_count;
        if (fnorm < c.residual) {
          c.point = x;
          c.residual = fnorm;
        }
        matched = true;
        break;
      }
    }
    if (!matched) clusters.push_back(SolutionCluster{x, fnorm, 1});
  }

  std::sort(clusters.begin(), clusters.end(),
            [](const SolutionCluster& a, const SolutionCluster& b) {
              for (std::size_t j = 0; j < a.point.size(); ++j) {
                long long ra = llround(a.point[j] * 1e9);
                long long rb = llround(b.point[j] * 1e9);
                if (ra != rb) return ra < rb;
              }
              return false;
            });
  return clusters;
}

}  // namespace star
