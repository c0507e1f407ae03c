#include "star/transform2d.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace star {

namespace {

void require_unit(double ux, double uy) {
  if (std::fabs(std::hypot(ux, uy) - 1.0) > 1e-12)
    throw std::domain_error("direction vector must be unit length");
}

// Exit parameter of the backward ray {x - s u : s > 0} from (-1,1)^2.
double exit_parameter(double x, double y, double ux, double uy) {
  double t = std::numeric_limits<double>::infinity();
  if (ux > 0)
    t = std::min(t, (x + 1.0) / ux);
  else if (ux < 0)
    t = std::min(t, (x - 1.0) / ux);
  if (uy > 0)
    t = std::min(t, (y + 1.0) / uy);
  else if (uy < 0)
    t = std::min(t, (y - 1.0) / uy);
  return t;
}

}  // namespace

Field2D beam_transform(const Field2D& f, double ux, double uy) {
  require_unit(ux, uy);
  const Domain2D dom = f.domain;
  const int n = dom.n;
  const double step_target = dom.h() / 2.0;
  Field2D g(dom);
  for (int iy = 0; iy < n; ++iy) {
    double y = dom.coord(iy);
    for (int ix = 0; ix < n; ++ix) {
      double x = dom.coord(ix);
      double t = exit_parameter(x, y, ux, uy);
      // Nodes sit at fixed offsets i*(h/2) from the grid point so the
      // interpolation error is a smooth field; the fractional remainder is
      // absorbed at the boundary where integrands vanish.
      int k = static_cast<int>(std::floor(t / step_target));
      double acc;
      double last;
      if (k == 0) {
        last = f.interpolate(x, y);
        acc = 0.0;
      } else {
        double sum = 0.5 * f.interpolate(x, y);
        for (int i = 1; i < k; ++i)
          sum += f.interpolate(x - i * step_target * ux,
                               y - i * step_target * uy);
        last = f.interpolate(x - k * step_target * ux,
                             y - k * step_target * uy);
        acc = (sum + 0.5 * last) * step_target;
      }
      double rem = t - k * step_target;
      acc += 0.5 * rem * (last + f.interpolate(x - t * ux, y - t * uy));
      g.at(ix, iy) = acc;
    }
  }
  return g;
}

Field2D directional_derivative(const Field2D& f, double ux, double uy) {
  require_unit(ux, uy);
  const int n = f.domain.n;
  const double inv2h = 1.0 / (2.0 * f.domain.h());
  Field2D g(f.domain);
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      double dfdx, dfdy;
      if (ix == 0)
        dfdx = (-3.0 * f.at(0, iy) + 4.0 * f.at(1, iy) - f.at(2, iy)) * inv2h;
      else if (ix == n - 1)
        dfdx = (3.0 * f.at(n - 1, iy) - 4.0 * f.at(n - 2, iy) +
                f.at(n - 3, iy)) *
               inv2h;
      else
        dfdx = (f.at(ix + 1, iy) - f.at(ix - 1, iy)) * inv2h;
      if (iy == 0)
        dfdy = (-3.0 * f.at(ix, 0) + 4.0 * f.at(ix, 1) - f.at(ix, 2)) * inv2h;
      else if (iy == n - 1)
        dfdy = (3.0 * f.at(ix, n - 1) - 4.0 * f.at(ix, n - 2) +
                f.at(ix, n - 3)) *
               inv2h;
      else
        dfdy = (f.at(ix, iy + 1) - f.at(ix, iy - 1)) * inv2h;
      g.at(ix, iy) = ux * dfdx + uy * dfdy;
    }
  }
  return g;
}

namespace {

struct UnitBranches {
  std::vector<double> ux, uy, norm;
};

UnitBranches normalized_branches(const StarSymbol& s) {
  if (s.branches.n() != 2)
    throw std::domain_error("numeric star transform requires 2D branches");
  UnitBranches b;
  for (const auto& row : s.branches.rows) {
    double x = row[0].value(), y = row[1].value();
    double a = std::hypot(x, y);
    if (a == 0.0) throw std::domain_error("zero branch vector");
    b.ux.push_back(x / a);
    b.uy.push_back(y / a);
    b.norm.push_back(a);
  }
  return b;
}

}  // namespace

Field2D apply_star(const Field2D& f, const StarSymbol& s) {
  UnitBranches b = normalized_branches(s);
  Field2D out(f.domain);
  for (const auto& [mono, c] : s.p.terms()) {
    Field2D term = f;
    double weight = c.value();
    for (int i = 0; i < s.branches.m(); ++i) {
      for (int e = 0; e < mono.exp[i]; ++e) {
        term = beam_transform(term, b.ux[i], b.uy[i]);
        weight /= b.norm[i];
      }
    }
    out = axpy(weight, term, out);
  }
  return out;
}

Field2D dual_derivative_cascade(const Field2D& g, const StarSymbol& s) {
  UnitBranches b = normalized_branches(s);
  Field2D out = g;
  double scale = 1.0;
  for (int i = 0; i < s.branches.m(); ++i) {
    int d = s.p.degree_in(i);
    for (int e = 0; e < d; ++e) {
      out = directional_derivative(out, b.ux[i], b.uy[i]);
      scale *= b.norm[i];
    }
  }
  for (double& v : out.samples) v *= scale;
  return out;
}

Field2D solve_laplacian_power(const Field2D& h, double c, int j) {
  if (c == 0.0)
    throw std::domain_error(
        "solve_laplacian_power: C = 0 (non-invertible star)");
  if (j < 1) throw std::domain_error("solve_laplacian_power: need j >= 1");
  const int n = h.domain.n;
  const double grid_h = h.domain.h();

  std::vector<double> work = h.samples;
  fftw_plan fwd = fftw_plan_r2r_2d(n, n, work.data(), work.data(),
                                   FFTW_RODFT10, FFTW_RODFT10, FFTW_ESTIMATE);
  fftw_execute(fwd);
  fftw_destroy_plan(fwd);

  // Eigenvalues of the cell-centered 5-point Laplacian with Dirichlet faces.
  std::vector<double> lam(n);
  for (int k = 0; k < n; ++k) {
    double s = std::sin(std::numbers::pi * (k + 1) / (2.0 * n));
    lam[k] = -4.0 / (grid_h * grid_h) * s * s;
  }
  const double norm = 1.0 / (4.0 * n * n);  // RODFT01(RODFT10) = 2N x id per axis
  for (int ky = 0; ky < n; ++ky)
    for (int kx = 0; kx < n; ++kx) {
      double eig = lam[kx] + lam[ky];
      double denom = c;
      for (int p = 0; p < j; ++p) denom *= eig;
      work[std::size_t(ky) * n + kx] *= norm / denom;
    }

  Field2D f(h.domain);
  f.samples = std::move(work);
  fftw_plan bwd =
      fftw_plan_r2r_2d(n, n, f.samples.data(), f.samples.data(),
                       FFTW_RODFT01, FFTW_RODFT01, FFTW_ESTIMATE);
  fftw_execute(bwd);
  fftw_destroy_plan(bwd);
  return f;
}

namespace {

// Tikhonov-regularized division by sigma(i xi) on a zero-padded periodic
// extension.  Approximate: periodization replaces the true free-space solve.
Field2D fourier_divide(const Field2D& h, const Polynomial& sigma,
                       double eps_reg) {
  const int n = h.domain.n;
  const int m = 2 * n;  // zero-padded extent
  const double grid_h = h.domain.h();
  std::vector<double> padded(std::size_t(m) * m, 0.0);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix)
      padded[std::size_t(iy) * m + ix] = h.at(ix, iy);

  std::vector<std::complex<double>> freq(std::size_t(m) * (m / 2 + 1));
  fftw_plan fwd = fftw_plan_dft_r2c_2d(
      m, m, padded.data(), reinterpret_cast<fftw_complex*>(freq.data()),
      FFTW_ESTIMATE);
  fftw_execute(fwd);
  fftw_destroy_plan(fwd);

  const double two_pi = 2.0 * std::numbers::pi;
  Polynomial sf = sigma.to_float();
  for (int ky = 0; ky < m; ++ky) {
    int sy = ky <= m / 2 ? ky : ky - m;
    double xi_y = two_pi * sy / (m * grid_h);
    for (int kx = 0; kx <= m / 2; ++kx) {
      double xi_x = two_pi * kx / (m * grid_h);
      std::complex<double> sval(0.0, 0.0);
      for (const auto& [mono, coef] : sf.terms()) {
        std::complex<double> t(coef.value(), 0.0);
        for (int e = 0; e < mono.exp[0]; ++e)
          t *= std::complex<double>(0.0, xi_x);
        for (int e = 0; e < mono.exp[1]; ++e)
          t *= std::complex<double>(0.0, xi_y);
        sval += t;
      }
      double denom = std::norm(sval) + eps_reg * eps_reg;
      freq[std::size_t(ky) * (m / 2 + 1) + kx] *= std::conj(sval) / denom;
    }
  }

  fftw_plan bwd = fftw_plan_dft_c2r_2d(
      m, m, reinterpret_cast<fftw_complex*>(freq.data()), padded.data(),
      FFTW_ESTIMATE);
  fftw_execute(bwd);
  fftw_destroy_plan(bwd);

  Field2D f(h.domain);
  const double norm = 1.0 / (double(m) * m);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix)
      f.at(ix, iy) = padded[std::size_t(iy) * m + ix] * norm;
  return f;
}

}  // namespace

Field2D invert_star(const Field2D& g, const StarSymbol& s, double eps_reg) {
  DualSymbol dual = dual_symbol(s);
  if (approx_zero(dual.sigma, kEpsPoly))
    throw std::domain_error(
        "invert_star: star is non-injective (dual operator vanishes)");
  Field2D h = dual_derivative_cascade(g, s);
  if (dual.sigma.total_degree() == 0) {
    double c = dual.sigma.terms().begin()->second.value();
    for (double& v : h.samples) v /= c;
    return h;
  }
  if (auto lp = laplacian_power_form(dual))
    return solve_laplacian_power(h, lp->first.value(), lp->second);
  return fourier_divide(h, dual.sigma, eps_reg);
}

double null_residual(const StarSymbol& s, const Field2D& f) {
  Field2D r = dual_derivative_cascade(apply_star(f, s), s);
  return l2_norm(r) / l2_norm(f);
}

}  // namespace star
