#include "star/field2d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace star {

double Field2D::interpolate(double x, double y) const {
  int n = domain.n;
  double h = domain.h();
  double gx = (x + 1.0) / h - 0.5;
  double gy = (y + 1.0) / h - 0.5;
  int ix = static_cast<int>(std::floor(gx));
  int iy = static_cast<int>(std::floor(gy));
  double fx = gx - ix, fy = gy - iy;
  auto sample = [&](int i, int j) -> double {
    if (i < 0 || j < 0 || i >= n || j >= n) return 0.0;
    return at(i, j);
  };
  return (1 - fx) * (1 - fy) * sample(ix, iy) +
         fx * (1 - fy) * sample(ix + 1, iy) +
         (1 - fx) * fy * sample(ix, iy + 1) +
         fx * fy * sample(ix + 1, iy + 1);
}

bool Field2D::all_finite() const {
  for (double v : samples)
    if (!std::isfinite(v)) return false;
  return true;
}

Field2D make_phantom(const Phantom& spec, const Domain2D& dom) {
  if (dom.n < 16) throw std::domain_error("make_phantom: need N >= 16");
  if (spec.width <= 0) throw std::domain_error("make_phantom: width <= 0");
  std::size_t expected = spec.kind == PhantomKind::gaussian_bump ? 1 : 2;
  if (spec.centers.size() != expected)
    throw std::domain_error("make_phantom: wrong center count for kind");

  Field2D f(dom);
  const double clip = 1e-14 * spec.amplitude;
  for (int iy = 0; iy < dom.n; ++iy) {
    for (int ix = 0; ix < dom.n; ++ix) {
      double x = dom.coord(ix), y = dom.coord(iy);
      double v = 0.0;
      for (const auto& c : spec.centers) {
        double dx = x - c[0], dy = y - c[1];
        double bump =
            spec.amplitude *
            std::exp(-(dx * dx + dy * dy) / (spec.width * spec.width));
        if (bump >= clip) v += bump;
      }
      f.at(ix, iy) = v;
    }
  }

  double boundary = 0.0;
  for (int i = 0; i < dom.n; ++i) {
    boundary = std::max({boundary, std::fabs(f.at(i, 0)),
                         std::fabs(f.at(i, dom.n - 1)), std::fabs(f.at(0, i)),
                         std::fabs(f.at(dom.n - 1, i))});
  }
  if (boundary > 1e-12 * spec.amplitude)
    throw std::domain_error(
        "make_phantom: boundary trace exceeds 1e-12 x amplitude");
  return f;
}

double l2_norm(const Field2D& f) {
  double s = 0.0;
  for (double v : f.samples) s += v * v;
  return std::sqrt(s * f.domain.h() * f.domain.h());
}

double rel_l2_error(const Field2D& approx, const Field2D& exact) {
  if (approx.domain.n != exact.domain.n)
    throw std::domain_error("rel_l2_error: grid mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < approx.samples.size(); ++i) {
    double d = approx.samples[i] - exact.samples[i];
    num += d * d;
    den += exact.samples[i] * exact.samples[i];
  }
  if (den == 0.0) throw std::domain_error("rel_l2_error: zero reference");
  return std::sqrt(num / den);
}

Field2D axpy(double alpha, const Field2D& x, const Field2D& y) {
  if (x.domain.n != y.domain.n) throw std::domain_error("axpy: grid mismatch");
  Field2D r(x.domain);
  for (std::size_t i = 0; i < r.samples.size(); ++i)
    r.samples[i] = alpha * x.samples[i] + y.samples[i];
  return r;
}

void write_sfld(const Field2D& f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_sfld: cannot open " + path);
  char header[16] = {'S', 'F', 'L', 'D'};
  std::uint32_t n = static_cast<std::uint32_t>(f.domain.n);
  std::uint32_t reserved = 0;
  std::memcpy(header + 4, &n, 4);
  std::memcpy(header + 8, &reserved, 4);
  os.write(header, 16);
  os.write(reinterpret_cast<const char*>(f.samples.data()),
           static_cast<std::streamsize>(f.samples.size() * sizeof(double)));
}

Field2D read_sfld(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_sfld: cannot open " + path);
  char header[16];
  is.read(header, 16);
  if (!is || std::memcmp(header, "SFLD", 4) != 0)
    throw std::runtime_error("read_sfld: bad magic");
  std::uint32_t n;
  std::memcpy(&n, header + 4, 4);
  Field2D f(Domain2D{static_cast<int>(n)});
  is.read(reinterpret_cast<char*>(f.samples.data()),
          static_cast<std::streamsize>(f.samples.size() * sizeof(double)));
  if (!is) throw std::runtime_error("read_sfld: truncated payload");
  return f;
}

void write_csv(const Field2D& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_csv: cannot open " + path);
  os.precision(17);
  for (int iy = 0; iy < f.domain.n; ++iy) {
    for (int ix = 0; ix < f.domain.n; ++ix) {
      if (ix) os << ",";
      os << f.at(ix, iy);
    }
    os << "\n";
  }
}

void write_pgm(const Field2D& f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_pgm: cannot open " + path);
  double lo = *std::min_element(f.samples.begin(), f.samples.end());
  double hi = *std::max_element(f.samples.begin(), f.samples.end());
  double span = hi > lo ? hi - lo : 1.0;
  os << "P5\n" << f.domain.n << " " << f.domain.n << "\n255\n";
  for (int iy = 0; iy < f.domain.n; ++iy)
    for (int ix = 0; ix < f.domain.n; ++ix) {
      unsigned char byte = static_cast<unsigned char>(
          std::lround(255.0 * (f.at(ix, iy) - lo) / span));
      os.write(reinterpret_cast<const char*>(&byte), 1);
    }
}

}  // namespace star
