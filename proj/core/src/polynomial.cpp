#include "star/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace star {

Polynomial::Polynomial(int var_count, ScalarTag tag)
    : vars_(var_count), tag_(tag) {
  if (var_count < 0) throw std::domain_error("Polynomial: negative var count");
}

Polynomial Polynomial::constant(int var_count, const Scalar& c) {
  Polynomial p(var_count, c.tag());
  p.add_term(Monomial{std::vector<int>(var_count, 0)}, c);
  return p;
}

Polynomial Polynomial::variable(int var_count, int index, ScalarTag tag) {
  if (index < 0 || index >= var_count)
    throw std::domain_error("Polynomial: variable index out of range");
  Polynomial p(var_count, tag);
  Monomial m{std::vector<int>(var_count, 0)};
  m.exp[index] = 1;
  p.add_term(m, Scalar::one(tag));
  return p;
}

void Polynomial::add_term(const Monomial& mono, const Scalar& c) {
  if (static_cast<int>(mono.exp.size()) != vars_)
    throw std::domain_error("Polynomial: monomial length mismatch");
  if (c.tag() != tag_)
    throw std::domain_error("Polynomial: coefficient tag mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Polynomial::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Scalar::zero(tag_) : it->second;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (vars_ != o.vars_)
    throw std::domain_error("Polynomial: variable count mismatch");
  if (tag_ != o.tag_) throw std::domain_error("Polynomial: tag mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_, tag_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(vars_, tag_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (int i = 0; i < vars_; ++i) m.exp[i] += mb.exp[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(vars_, tag_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.add_term(m, cc * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return vars_ == o.vars_ && tag_ == o.tag_ && terms_ == o.terms_;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp[var]);
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(vars_, tag_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] == 0) continue;
    Monomial d = m;
    int e = d.exp[var]--;
    Scalar factor = tag_ == ScalarTag::exact ? Scalar::rat(e)
                                             : Scalar::flt(double(e));
    r.add_term(d, c * factor);
  }
  return r;
}

Polynomial Polynomial::to_float() const {
  if (tag_ == ScalarTag::floating) return *this;
  Polynomial r(vars_, ScalarTag::floating);
  for (const auto& [m, c] : terms_) r.add_term(m, Scalar::flt(c.value()));
  return r;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != vars_)
    throw std::domain_error("Polynomial::evaluate: point length mismatch");
  Scalar sum = Scalar::zero(tag_);
  for (const auto& [m, c] : terms_) {
    Scalar prod = c;
    for (int i = 0; i < vars_; ++i)
      for (int e = 0; e < m.exp[i]; ++e) prod *= point[i];
    sum += prod;
  }
  return sum;
}

double Polynomial::evaluate_double(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != vars_)
    throw std::domain_error("Polynomial::evaluate: point length mismatch");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double prod = c.value();
    for (int i = 0; i < vars_; ++i)
      for (int e = 0; e < m.exp[i]; ++e) prod *= point[i];
    sum += prod;
  }
  return sum;
}

double Polynomial::max_abs_coeff() const {
  double mx = 0.0;
  for (const auto& [m, c] : terms_) mx = std::max(mx, std::fabs(c.value()));
  return mx;
}

std::string Polynomial::str(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int i = 0; i < vars_; ++i) {
      if (m.exp[i] == 0) continue;
      os << "*" << var_prefix << (i + 1);
      if (m.exp[i] > 1) os << "^" << m.exp[i];
    }
  }
  return os.str();
}

Polynomial elementary_symmetric(int degree, int var_count, ScalarTag tag) {
  if (degree < 0 || var_count < 1 || degree > var_count)
    throw std::domain_error("elementary_symmetric: need 0 <= r <= m");
  Polynomial p(var_count, tag);
  // subsets of size `degree`, emitted by lex walk over index combinations
  std::vector<int> idx(degree);
  for (int i = 0; i < degree; ++i) idx[i] = i;
  while (true) {
    Monomial m{std::vector<int>(var_count, 0)};
    for (int i : idx) m.exp[i] = 1;
    p.add_term(m, Scalar::one(tag));
    if (degree == 0) break;
    int k = degree - 1;
    while (k >= 0 && idx[k] == var_count - degree + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < degree; ++j) idx[j] = idx[j - 1] + 1;
  }
  return p;
}

Polynomial reciprocal(const Polynomial& p) {
  if (p.is_zero())
    throw std::domain_error("reciprocal: undefined for the zero polynomial");
  int v = p.var_count();
  std::vector<int> deg(v);
  for (int i = 0; i < v; ++i) deg[i] = p.degree_in(i);
  Polynomial r(v, p.tag());
  for (const auto& [m, c] : p.terms()) {
    Monomial flipped = m;
    for (int i = 0; i < v; ++i) flipped.exp[i] = deg[i] - m.exp[i];
    r.add_term(flipped, c);
  }
  return r;
}

Polynomial substitute_linear_forms(
    const Polynomial& p, const std::vector<std::vector<Scalar>>& U) {
  int m = p.var_count();
  if (static_cast<int>(U.size()) != m)
    throw std::domain_error("substitute_linear_forms: row count mismatch");
  int n = m > 0 ? static_cast<int>(U[0].size()) : 0;
  for (const auto& row : U)
    if (static_cast<int>(row.size()) != n)
      throw std::domain_error("substitute_linear_forms: ragged matrix");

  std::vector<Polynomial> forms;
  forms.reserve(m);
  for (int i = 0; i < m; ++i) {
    Polynomial li(n, p.tag());
    for (int j = 0; j < n; ++j) {
      Monomial mo{std::vector<int>(n, 0)};
      mo.exp[j] = 1;
      li.add_term(mo, U[i][j]);
    }
    forms.push_back(std::move(li));
  }

  Polynomial result(n, p.tag());
  for (const auto& [mono, c] : p.terms()) {
    Polynomial prod = Polynomial::constant(n, c);
    for (int i = 0; i < m; ++i)
      for (int e = 0; e < mono.exp[i]; ++e) prod = prod * forms[i];
    result = result + prod;
  }
  return result;
}

double coeff_deviation(const Polynomial& a, const Polynomial& b) {
  double dev = 0.0;
  for (const auto& [m, c] : a.terms())
    dev = std::max(dev, std::fabs(c.value() - b.coeff(m).value()));
  for (const auto& [m, c] : b.terms())
    dev = std::max(dev, std::fabs(c.value() - a.coeff(m).value()));
  return dev;
}

double normalized_deviation(const Polynomial& a, const Polynomial& b) {
  double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
  return coeff_deviation(a, b) / scale;
}

bool approx_equal(const Polynomial& a, const Polynomial& b, double eps) {
  if (a.var_count() != b.var_count()) return false;
  if (a.tag() == ScalarTag::exact && b.tag() == ScalarTag::exact)
    return a == b;
  return normalized_deviation(a, b) <= eps;
}

bool approx_zero(const Polynomial& a, double eps) {
  if (a.tag() == ScalarTag::exact) return a.is_zero();
  return a.max_abs_coeff() <= eps;
}

}  // namespace star
