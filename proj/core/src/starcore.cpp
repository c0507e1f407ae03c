#include "star/starcore.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "star/permanent.hpp"

namespace star {

BranchMatrix BranchMatrix::from_doubles(
    const std::vector<std::vector<double>>& rows) {
  BranchMatrix u;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (double v : r) row.push_back(Scalar::flt(v));
    u.rows.push_back(std::move(row));
  }
  return u;
}

BranchMatrix BranchMatrix::from_ints(
    const std::vector<std::vector<int>>& rows) {
  BranchMatrix u;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (int v : r) row.push_back(Scalar::rat(v));
    u.rows.push_back(std::move(row));
  }
  return u;
}

std::vector<std::vector<double>> BranchMatrix::as_doubles() const {
  std::vector<std::vector<double>> out;
  for (const auto& r : rows) {
    std::vector<double> row;
    for (const Scalar& v : r) row.push_back(v.value());
    out.push_back(std::move(row));
  }
  return out;
}

BranchMatrix BranchMatrix::to_float() const {
  if (tag() == ScalarTag::floating) return *this;
  return from_doubles(as_doubles());
}

bool BranchMatrix::has_zero_row() const {
  for (const auto& r : rows) {
    bool zero = true;
    for (const Scalar& v : r)
      if (!v.is_zero()) zero = false;
    if (zero) return true;
  }
  return false;
}

StarSymbol::StarSymbol(Polynomial poly, BranchMatrix u)
    : p(std::move(poly)), branches(std::move(u)) {
  if (p.var_count() != branches.m())
    throw std::domain_error("StarSymbol: p must have one variable per branch");
  if (branches.has_zero_row())
    throw std::domain_error("StarSymbol: zero branch vector");
  if (p.tag() != branches.tag()) {
    p = p.to_float();
    branches = branches.to_float();
  }
  if (p.is_homogeneous() && !p.is_zero()) order = p.total_degree();
}

DualSymbol dual_symbol(const StarSymbol& s) {
  Polynomial sigma = substitute_linear_forms(reciprocal(s.p), s.branches.rows);
  return DualSymbol{std::move(sigma), s, DualPath::substitution};
}

namespace {

// Index k with p == e_k, or -1.
int elementary_degree(const Polynomial& p) {
  int d = p.total_degree();
  if (d < 0 || d > p.var_count()) return -1;
  Polynomial ref = elementary_symmetric(d, p.var_count(), p.tag());
  return p == ref ? d : -1;
}

void for_each_multi_index(int n, int total,
                          const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> k(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n - 1) {
      k[pos] = rem;
      f(k);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      k[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  if (n > 0) rec(0, total);
}

Scalar factorial_product(const std::vector<int>& k, ScalarTag tag) {
  long long prod = 1;
  for (int v : k)
    for (int i = 2; i <= v; ++i) prod *= i;
  return tag == ScalarTag::exact ? Scalar::rat(prod)
                                 : Scalar::flt(double(prod));
}

}  // namespace

DualSymbol dual_symbol_permanent_path(const StarSymbol& s) {
  int k = elementary_degree(s.p);
  if (k < 0)
    throw std::domain_error(
        "dual_symbol_permanent_path: polynomial symbol must be elementary "
        "symmetric");
  int m = s.branches.m(), n = s.branches.n();
  int r = m - k;  // degree of the dual symbol
  ScalarTag tag = s.branches.tag();

  Polynomial sigma(n, tag);
  for_each_multi_index(n, r, [&](const std::vector<int>& kv) {
    RectMatrix block;
    block.entries.resize(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        for (int c = 0; c < kv[j]; ++c)
          block.entries[i].push_back(s.branches.rows[i][j]);
    Scalar coef = rectangular_permanent(block) / factorial_product(kv, tag);
    sigma.add_term(Monomial{kv}, coef);
  });
  return DualSymbol{std::move(sigma), s, DualPath::permanent};
}

bool is_injective(const StarSymbol& s, double eps) {
  return !approx_zero(dual_symbol(s).sigma, eps);
}

std::optional<std::pair<Scalar, int>> laplacian_power_form(const DualSymbol& d,
                                                           double eps) {
  const Polynomial& sigma = d.sigma;
  if (sigma.is_zero() || !sigma.is_homogeneous()) return std::nullopt;
  int deg = sigma.total_degree();
  if (deg <= 0 || deg % 2 != 0) return std::nullopt;
  int j = deg / 2;
  int n = sigma.var_count();

  Monomial lead{std::vector<int>(n, 0)};
  lead.exp[0] = deg;
  Scalar c = sigma.coeff(lead);
  if (c.is_zero()) return std::nullopt;

  Polynomial quad(n, sigma.tag());
  for (int i = 0; i < n; ++i) {
    Monomial m{std::vector<int>(n, 0)};
    m.exp[i] = 2;
    quad.add_term(m, Scalar::one(sigma.tag()));
  }
  Polynomial ref = Polynomial::constant(n, c);
  for (int i = 0; i < j; ++i) ref = ref * quad;

  if (!approx_equal(sigma, ref, eps)) return std::nullopt;
  return std::make_pair(c, j);
}

namespace {

// Sign pattern of the leading principal minors of an exact symmetric matrix.
SymbolClass classify_quadratic_exact(const Polynomial& sigma) {
  int n = sigma.var_count();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Monomial m{std::vector<int>(n, 0)};
      m.exp[i] += 1;
      m.exp[j] += 1;
      Rational c = sigma.coeff(m).rational();
      if (i == j)
        a[i][i] = c;
      else
        a[i][j] = a[j][i] = c / 2;
    }
  }
  bool pos = true, neg = true;
  for (int k = 1; k <= n; ++k) {
    // Gaussian elimination determinant of the leading k x k block.
    std::vector<std::vector<Rational>> b(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) b[i][j] = a[i][j];
    Rational det = 1;
    bool singular = false;
    for (int col = 0; col < k && !singular; ++col) {
      int pivot = -1;
      for (int row = col; row < k; ++row)
        if (b[row][col] != 0) {
          pivot = row;
          break;
        }
      if (pivot < 0) {
        singular = true;
        break;
      }
      if (pivot != col) {
        std::swap(b[pivot], b[col]);
        det = -det;
      }
      det *= b[col][col];
      for (int row = col + 1; row < k; ++row) {
        Rational f = b[row][col] / b[col][col];
        for (int j = col; j < k; ++j) b[row][j] -= f * b[col][j];
      }
    }
    if (singular) return SymbolClass::non_elliptic_nonzero;
    if (det <= 0) pos = false;
    bool neg_ok = (k % 2 == 0) ? det > 0 : det < 0;
    if (!neg_ok) neg = false;
  }
  return (pos || neg) ? SymbolClass::elliptic
                      : SymbolClass::non_elliptic_nonzero;
}

SymbolClass classify_by_sampling(const Polynomial& sigma, double eps) {
  Polynomial f = sigma.to_float();
  double scale = std::max(1e-300, f.max_abs_coeff());
  int n = f.var_count();
  std::mt19937 rng(0x5eed1234u);
  std::normal_distribution<double> gauss(0.0, 1.0);

  bool saw_pos = false, saw_neg = false;
  double min_abs = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<double> dir(n);
    double norm = 0.0;
    for (double& v : dir) {
      v = gauss(rng);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    if (norm < 1e-12) continue;
    for (double& v : dir) v /= norm;
    double val = f.evaluate_double(dir) / scale;
    min_abs = std::min(min_abs, std::fabs(val));
    if (val > 0) saw_pos = true;
    if (val < 0) saw_neg = true;
  }
  if (saw_pos && saw_neg) return SymbolClass::non_elliptic_nonzero;
  if (min_abs > eps) return SymbolClass::elliptic;
  if (min_abs <= 1e-12) return SymbolClass::non_elliptic_nonzero;
  return SymbolClass::undetermined;
}

}  // namespace

SymbolClass classify_symbol(const DualSymbol& d, double eps) {
  const Polynomial& sigma = d.sigma;
  if (!sigma.is_homogeneous())
    throw std::domain_error("classify_symbol: symbol must be homogeneous");
  if (approx_zero(sigma, eps)) return SymbolClass::identically_zero;
  int deg = sigma.total_degree();
  if (deg == 0) return SymbolClass::elliptic;  // nonzero constant symbol
  if (deg == 2 && sigma.tag() == ScalarTag::exact)
    return classify_quadratic_exact(sigma);
  return classify_by_sampling(sigma, eps);
}

}  // namespace star
