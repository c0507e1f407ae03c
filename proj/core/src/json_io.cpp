#include "star/json_io.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace star {

using nlohmann::json;

namespace {

long long to_ll(const Rational& r, bool num) {
  auto part = num ? numerator(r) : denominator(r);
  if (part < std::numeric_limits<long long>::min() ||
      part > std::numeric_limits<long long>::max())
    throw std::domain_error("polynomial_to_json: coefficient exceeds int64");
  return part.convert_to<long long>();
}

bool integral(double v) {
  return std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9e15;
}

}  // namespace

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["exp"] = m.exp;
    if (c.is_exact()) {
      t["num"] = to_ll(c.rational(), true);
      t["den"] = to_ll(c.rational(), false);
    } else {
      t["coef"] = c.value();
    }
    terms.push_back(std::move(t));
  }
  return json{{"vars", p.var_count()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
  int vars = j.at("vars").get<int>();
  const json& terms = j.at("terms");
  ScalarTag tag = ScalarTag::exact;
  for (const auto& t : terms)
    if (t.contains("coef")) tag = ScalarTag::floating;
  Polynomial p(vars, tag);
  for (const auto& t : terms) {
    Monomial m{t.at("exp").get<std::vector<int>>()};
    Scalar c = tag == ScalarTag::exact
                   ? Scalar(Rational(t.at("num").get<long long>(),
                                     t.at("den").get<long long>()))
                   : Scalar::flt(t.at("coef").get<double>());
    p.add_term(m, c);
  }
  return p;
}

json branch_matrix_to_json(const BranchMatrix& u) {
  json rows = json::array();
  for (const auto& r : u.rows) {
    json row = json::array();
    for (const Scalar& v : r) {
      if (v.is_exact() && denominator(v.rational()) == 1)
        row.push_back(to_ll(v.rational(), true));
      else
        row.push_back(v.value());
    }
    rows.push_back(std::move(row));
  }
  return json{{"m", u.m()}, {"n", u.n()}, {"rows", std::move(rows)}};
}

BranchMatrix branch_matrix_from_json(const json& j) {
  const json& rows = j.at("rows");
  bool exact = true;
  for (const auto& r : rows)
    for (const auto& v : r)
      if (!v.is_number_integer() && !integral(v.get<double>())) exact = false;
  BranchMatrix u;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (const auto& v : r)
      row.push_back(exact ? Scalar::rat(static_cast<long long>(
                                v.get<double>()))
                          : Scalar::flt(v.get<double>()));
    u.rows.push_back(std::move(row));
  }
  if (j.contains("m") && j.at("m").get<int>() != u.m())
    throw std::domain_error("branch matrix: row count disagrees with m");
  if (j.contains("n") && u.m() > 0 && j.at("n").get<int>() != u.n())
    throw std::domain_error("branch matrix: column count disagrees with n");
  return u;
}

json star_symbol_to_json(const StarSymbol& s) {
  return json{{"p", polynomial_to_json(s.p)},
              {"U", branch_matrix_to_json(s.branches)}};
}

StarSymbol star_symbol_from_json(const json& j) {
  BranchMatrix u = branch_matrix_from_json(j.at("U"));
  const json& pj = j.at("p");
  Polynomial p = pj.contains("elementary")
                     ? elementary_symmetric(pj.at("elementary").get<int>(),
                                            u.m(), u.tag())
                     : polynomial_from_json(pj);
  return StarSymbol(std::move(p), std::move(u));
}

}  // namespace star
