#pragma once

#include <map>
#include <string>
#include <vector>

#include "star/scalar.hpp"

namespace star {

/// Exponent vector of a single term.  Length always equals the variable
/// count of the owning polynomial.
struct Monomial {
  std::vector<int> exp;

  int degree() const {
    int d = 0;
    for (int e : exp) d += e;
    return d;
  }
  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

/// Graded lexicographic order: lower total degree first, ties broken
/// lexicographically on the exponent vector.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp < b.exp;
  }
};

/// Sparse multivariate polynomial in canonical form: no zero-coefficient
/// terms, all coefficients carrying the same scalar tag.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GradedLex>;

  explicit Polynomial(int var_count, ScalarTag tag = ScalarTag::exact);

  static Polynomial constant(int var_count, const Scalar& c);
  static Polynomial variable(int var_count, int index, ScalarTag tag);

  int var_count() const { return vars_; }
  ScalarTag tag() const { return tag_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates c * x^mono, dropping the term if the sum cancels.
  void add_term(const Monomial& mono, const Scalar& c);

  Scalar coeff(const Monomial& mono) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  bool operator==(const Polynomial& o) const;

  int total_degree() const;      // -1 for the zero polynomial
  int degree_in(int var) const;  // per-variable max degree
  bool is_homogeneous() const;   // zero polynomial counts as homogeneous

  Polynomial derivative(int var) const;
  Polynomial to_float() const;

  Scalar evaluate(const std::vector<Scalar>& point) const;
  double evaluate_double(const std::vector<double>& point) const;

  double max_abs_coeff() const;

  std::string str(const std::string& var_prefix = "x") const;

 private:
  void check_compatible(const Polynomial& o) const;
  int vars_;
  ScalarTag tag_;
  TermMap terms_;
};

/// e_r in m variables, all coefficients 1.  e_0 = 1.
Polynomial elementary_symmetric(int degree, int var_count,
                                ScalarTag tag = ScalarTag::exact);

/// p* with each exponent vector complemented against the per-variable
/// degrees of p.  Rejects the zero polynomial.
Polynomial reciprocal(const Polynomial& p);

/// p(Uy): substitutes x_i <- sum_j U[i][j] y_j.  U has p.var_count() rows;
/// the result lives in U's column count many variables.
Polynomial substitute_linear_forms(const Polynomial& p,
                                   const std::vector<std::vector<Scalar>>& U);

/// Max absolute coefficient difference over the union of terms.
double coeff_deviation(const Polynomial& a, const Polynomial& b);

/// coeff_deviation normalized by max(1, largest coefficient magnitude).
double normalized_deviation(const Polynomial& a, const Polynomial& b);

bool approx_equal(const Polynomial& a, const Polynomial& b, double eps);
bool approx_zero(const Polynomial& a, double eps);

}  // namespace star
