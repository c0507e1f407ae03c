#pragma once

#include "star/field2d.hpp"
#include "star/starcore.hpp"

namespace star {

/// Truncated divergent beam transform on (-1,1)^2: at each grid point x,
/// integrates f along {x + t u, t in [-T, 0]} where T is the exit parameter
/// of the backward ray.  u must be unit; composite trapezoid at step h/2
/// with bilinear interpolation.
Field2D beam_transform(const Field2D& f, double ux, double uy);

/// u . grad f, second-order central differences with one-sided boundary
/// stencils.  u must be unit.
Field2D directional_derivative(const Field2D& f, double ux, double uy);

/// Star transform S f = p(X_{u_1}, ..., X_{u_m}) f.  Branch rows are
/// normalized internally; X_{au} = (1/a) X_u supplies the weights.
Field2D apply_star(const Field2D& f, const StarSymbol& s);

/// D_{u_1}^{d_1} ... D_{u_m}^{d_m} g with d_j = deg_j(p).  For
/// g = apply_star(f, s) this approximates L f.
Field2D dual_derivative_cascade(const Field2D& g, const StarSymbol& s);

/// Solves Delta^j f = h / C with homogeneous Dirichlet conditions via the
/// discrete sine transform.  C must be nonzero.
Field2D solve_laplacian_power(const Field2D& h, double c, int j);

/// Recovers f from g = S f: derivative cascade followed by either the
/// Laplacian-power solve (when sigma = C Delta^j) or regularized Fourier
/// division with parameter eps_reg.  Rejects non-injective stars.
Field2D invert_star(const Field2D& g, const StarSymbol& s, double eps_reg);

/// || cascade(S f) ||_2 / || f ||_2, a numerical witness of L = 0.
double null_residual(const StarSymbol& s, const Field2D& f);

}  // namespace star
