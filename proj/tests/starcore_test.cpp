#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "star/starcore.hpp"
#include "test_util.hpp"

using namespace star;

TEST_CASE("triangle order-1 star dualizes to a multiple of the Laplacian") {
  StarSymbol s(elementary_symmetric(1, 3, ScalarTag::floating),
               testutil::triangle_branches_float());
  DualSymbol d = dual_symbol(s);
  CHECK(d.path == DualPath::substitution);
  CHECK(approx_equal(d.sigma, testutil::laplacian_power_poly(2, 1, -0.75),
                     1e-12));
  auto lp = laplacian_power_form(d);
  REQUIRE(lp.has_value());
  CHECK(lp->second == 1);
  CHECK(lp->first.value() == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(classify_symbol(d) == SymbolClass::elliptic);
  CHECK(is_injective(s));
}

TEST_CASE("square order-1 star is non-injective") {
  StarSymbol s(elementary_symmetric(1, 4), testutil::square_branches_exact());
  DualSymbol d = dual_symbol(s);
  CHECK(d.sigma.is_zero());
  CHECK(classify_symbol(d) == SymbolClass::identically_zero);
  CHECK_FALSE(is_injective(s));
}

TEST_CASE("tetrahedron e_2 star dualizes to -2 Laplacian, exactly") {
  BranchMatrix u = BranchMatrix::from_ints(
      {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
  StarSymbol s(elementary_symmetric(2, 4), u);
  DualSymbol d = dual_symbol(s);
  Polynomial expect(3);
  for (int i = 0; i < 3; ++i) {
    Monomial m{{0, 0, 0}};
    m.exp[i] = 2;
    expect.add_term(m, Scalar::rat(-2));
  }
  CHECK(d.sigma == expect);
  auto lp = laplacian_power_form(d);
  REQUIRE(lp.has_value());
  CHECK(lp->first == Scalar::rat(-2));
  CHECK(lp->second == 1);
  CHECK(classify_symbol(d) == SymbolClass::elliptic);
}

TEST_CASE("paired branches in R^3 give a non-injective order-1 star") {
  BranchMatrix u = BranchMatrix::from_ints({{1, 0, 0},
                                            {-1, 0, 0},
                                            {0, 1, 0},
                                            {0, -1, 0},
                                            {0, 0, 1},
                                            {0, 0, -1}});
  CHECK_FALSE(is_injective(StarSymbol(elementary_symmetric(1, 6), u)));
}

TEST_CASE("opposite-sign pairs kill order-1 stars, random instances") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> n_dist(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    int n = n_dist(rng);
    BranchMatrix u;
    for (int i = 0; i < n; ++i) {
      std::vector<Scalar> row, neg;
      for (int j = 0; j < n; ++j) {
        Scalar v = testutil::random_rational(rng);
        if (i == j && v.is_zero()) v = Scalar::rat(1);
        row.push_back(v);
        neg.push_back(-v);
      }
      u.rows.push_back(row);
      u.rows.push_back(neg);
    }
    CHECK_FALSE(is_injective(StarSymbol(elementary_symmetric(1, 2 * n), u)));
  }
}

TEST_CASE("permanent path on the smallest elementary stars") {
  BranchMatrix u;
  u.rows = {{Scalar::rat(2)}, {Scalar::rat(3)}};

  DualSymbol d1 =
      dual_symbol_permanent_path(StarSymbol(elementary_symmetric(1, 2), u));
  CHECK(d1.path == DualPath::permanent);
  Polynomial expect1(1);
  expect1.add_term(Monomial{{1}}, Scalar::rat(5));
  CHECK(d1.sigma == expect1);

  DualSymbol d2 =
      dual_symbol_permanent_path(StarSymbol(elementary_symmetric(0, 2), u));
  Polynomial expect2(1);
  expect2.add_term(Monomial{{2}}, Scalar::rat(6));
  CHECK(d2.sigma == expect2);

  DualSymbol d3 = dual_symbol_permanent_path(
      StarSymbol(elementary_symmetric(1, 4), testutil::square_branches_exact()));
  CHECK(d3.sigma.is_zero());

  Polynomial not_elementary(2);
  not_elementary.add_term(Monomial{{1, 0}}, Scalar::rat(2));
  CHECK_THROWS_AS(
      dual_symbol_permanent_path(StarSymbol(not_elementary, u)),
      std::domain_error);
}

TEST_CASE("permanent path agrees with substitution path") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> m_dist(2, 6), n_dist(1, 3);
  for (int trial = 0; trial < 15; ++trial) {
    int m = m_dist(rng), n = n_dist(rng);
    BranchMatrix u = testutil::random_rational_matrix(m, n, rng);
    for (int r = 1; r <= std::min(4, m - 1); ++r) {
      StarSymbol s(elementary_symmetric(m - r, m), u);
      CHECK(dual_symbol_permanent_path(s).sigma == dual_symbol(s).sigma);
    }
  }
}

TEST_CASE("dual symbol of an elementary star is homogeneous of degree m-k") {
  std::mt19937 rng(99);
  for (int m = 2; m <= 5; ++m)
    for (int k = 1; k < m; ++k) {
      BranchMatrix u = testutil::random_rational_matrix(m, 2, rng);
      DualSymbol d = dual_symbol(StarSymbol(elementary_symmetric(k, m), u));
      CHECK(d.sigma.is_homogeneous());
      if (!d.sigma.is_zero()) CHECK(d.sigma.total_degree() == m - k);
    }
}

TEST_CASE("row scaling scales the order-1 dual symbol by lambda^(m-1)") {
  std::mt19937 rng(123);
  for (int m = 2; m <= 5; ++m) {
    BranchMatrix u = testutil::random_rational_matrix(m, 2, rng);
    BranchMatrix su = u;
    Scalar lambda = Scalar::rat(3, 2);
    for (auto& row : su.rows)
      for (auto& v : row) v *= lambda;
    Polynomial a =
        dual_symbol(StarSymbol(elementary_symmetric(1, m), u)).sigma;
    Polynomial b =
        dual_symbol(StarSymbol(elementary_symmetric(1, m), su)).sigma;
    Scalar factor = Scalar::rat(1);
    for (int i = 0; i < m - 1; ++i) factor *= lambda;
    CHECK(b == a.scaled(factor));
  }
}

TEST_CASE("laplacian power form recognition") {
  StarSymbol dummy(elementary_symmetric(1, 3, ScalarTag::floating),
                   testutil::triangle_branches_float());
  auto wrap = [&](Polynomial sigma) {
    return DualSymbol{std::move(sigma), dummy, DualPath::substitution};
  };

  auto sq = laplacian_power_form(wrap(testutil::laplacian_power_poly(3, 2, 1.0)));
  REQUIRE(sq.has_value());
  CHECK(sq->first.value() == doctest::Approx(1.0));
  CHECK(sq->second == 2);

  Polynomial saddle(2, ScalarTag::floating);
  saddle.add_term(Monomial{{2, 0}}, Scalar::flt(1.0));
  saddle.add_term(Monomial{{0, 2}}, Scalar::flt(-1.0));
  CHECK_FALSE(laplacian_power_form(wrap(saddle)).has_value());
  CHECK(classify_symbol(wrap(saddle)) == SymbolClass::non_elliptic_nonzero);

  Polynomial cross(2, ScalarTag::floating);
  cross.add_term(Monomial{{1, 1}}, Scalar::flt(1.0));
  CHECK(classify_symbol(wrap(cross)) == SymbolClass::non_elliptic_nonzero);
  CHECK(classify_symbol(wrap(Polynomial(2, ScalarTag::floating))) ==
        SymbolClass::identically_zero);
}

TEST_CASE("star symbol validation") {
  CHECK_THROWS_AS(StarSymbol(elementary_symmetric(1, 3),
                             testutil::square_branches_exact()),
                  std::domain_error);
  BranchMatrix zero_row = BranchMatrix::from_ints({{1, 0}, {0, 0}});
  CHECK_THROWS_AS(StarSymbol(elementary_symmetric(1, 2), zero_row),
                  std::domain_error);
  StarSymbol s(elementary_symmetric(1, 4), testutil::square_branches_exact());
  REQUIRE(s.order.has_value());
  CHECK(*s.order == 1);
}
