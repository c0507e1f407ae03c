#pragma once

#include <array>
#include <string>
#include <vector>

namespace star {

/// Cell-centered grid on the open square (-1,1)^2, spacing h = 2/N.
struct Domain2D {
  int n = 128;

  double h() const { return 2.0 / n; }
  double coord(int i) const { return -1.0 + (i + 0.5) * h(); }
};

/// Sampled scalar function on a Domain2D.  samples[iy * n + ix] holds the
/// value at (coord(ix), coord(iy)).
struct Field2D {
  Domain2D domain;
  std::vector<double> samples;

  explicit Field2D(Domain2D d = {})
      : domain(d), samples(static_cast<std::size_t>(d.n) * d.n, 0.0) {}

  double& at(int ix, int iy) { return samples[std::size_t(iy) * domain.n + ix]; }
  double at(int ix, int iy) const {
    return samples[std::size_t(iy) * domain.n + ix];
  }

  /// Bilinear interpolation in physical coordinates, zero outside the grid.
  double interpolate(double x, double y) const;

  bool all_finite() const;
};

enum class PhantomKind { gaussian_bump, two_bumps };

/// Smooth test function: one or two Gaussian bumps, truncated to exactly
/// zero where a bump falls below 1e-14 of its amplitude.
struct Phantom {
  PhantomKind kind = PhantomKind::gaussian_bump;
  std::vector<std::array<double, 2>> centers = {{0.0, 0.0}};
  double width = 0.18;
  double amplitude = 1.0;
};

/// Samples a phantom; rejects specs whose boundary trace exceeds
/// 1e-12 x amplitude (the field must be effectively supported inside).
Field2D make_phantom(const Phantom& spec, const Domain2D& dom);

double l2_norm(const Field2D& f);
double rel_l2_error(const Field2D& approx, const Field2D& exact);

Field2D axpy(double alpha, const Field2D& x, const Field2D& y);  // alpha*x + y

/// Raw binary format: 16-byte header (magic "SFLD", u32 N, u32 reserved,
/// 4 pad bytes), then N*N little-endian float64, row-major.
void write_sfld(const Field2D& f, const std::string& path);
Field2D read_sfld(const std::string& path);

void write_csv(const Field2D& f, const std::string& path);

/// 8-bit PGM, min-max scaled.
void write_pgm(const Field2D& f, const std::string& path);

}  // namespace star
