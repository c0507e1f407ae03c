#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "star/json_io.hpp"
#include "test_util.hpp"

using namespace star;

TEST_CASE("polynomial JSON round trip, exact and float") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> deg(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p(3);
    for (int t = 0; t < 5; ++t) {
      Monomial m{{deg(rng), deg(rng), deg(rng)}};
      p.add_term(m, testutil::random_rational(rng));
    }
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
    Polynomial pf = p.to_float();
    CHECK(polynomial_from_json(polynomial_to_json(pf)) == pf);
  }
}

TEST_CASE("branch matrix JSON round trip preserves the tag") {
  BranchMatrix exact = testutil::square_branches_exact();
  BranchMatrix back = branch_matrix_from_json(branch_matrix_to_json(exact));
  CHECK(back.tag() == ScalarTag::exact);
  CHECK(back.m() == 4);
  CHECK(back.rows[2][0] == Scalar::rat(-1));

  BranchMatrix fl = testutil::triangle_branches_float();
  BranchMatrix flb = branch_matrix_from_json(branch_matrix_to_json(fl));
  CHECK(flb.tag() == ScalarTag::floating);
  CHECK(flb.rows[1][1].value() == fl.rows[1][1].value());
}

TEST_CASE("star symbol JSON forms") {
  StarSymbol s(elementary_symmetric(1, 4), testutil::square_branches_exact());
  StarSymbol back = star_symbol_from_json(star_symbol_to_json(s));
  CHECK(back.p == s.p);
  CHECK(back.branches.rows[3][1] == Scalar::rat(-1));

  nlohmann::json j = {
      {"p", {{"elementary", 2}}},
      {"U", {{"rows", {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}}}}};
  StarSymbol tet = star_symbol_from_json(j);
  CHECK(tet.p == elementary_symmetric(2, 4));
  CHECK(tet.branches.n() == 3);

  nlohmann::json bad = {{"p", {{"elementary", 1}}},
                        {"U", {{"m", 3}, {"rows", {{1, 0}, {0, 1}}}}}};
  CHECK_THROWS_AS(star_symbol_from_json(bad), std::domain_error);
}
