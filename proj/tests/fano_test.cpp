#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "star/errors.hpp"
#include "star/fano.hpp"
#include "test_util.hpp"

using namespace star;

namespace {

const BranchMatrix kU1 =
    BranchMatrix::from_ints({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
const BranchMatrix kU2 =
    BranchMatrix::from_ints({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});

bool same_matrix(const BranchMatrix& a, const BranchMatrix& b) {
  if (a.m() != b.m() || a.n() != b.n()) return false;
  for (int i = 0; i < a.m(); ++i)
    for (int j = 0; j < a.n(); ++j)
      if (!(a.rows[i][j] == b.rows[i][j])) return false;
  return true;
}

BranchMatrix multiply(const BranchMatrix& u,
                      const std::vector<std::vector<Scalar>>& g) {
  BranchMatrix out;
  int n = u.n();
  for (const auto& row : u.rows) {
    std::vector<Scalar> r(n, Scalar::rat(0));
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) r[j] += row[l] * g[l][j];
    out.rows.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST_CASE("perfect matching counts and canonical order") {
  auto m4 = perfect_matchings(4);
  REQUIRE(m4.size() == 3);
  CHECK(m4[0].pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK(m4[1].pairs == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(m4[2].pairs == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});

  CHECK(perfect_matchings(2).size() == 1);
  CHECK(perfect_matchings(6).size() == 15);
  CHECK(perfect_matchings(8).size() == 105);
  CHECK(perfect_matchings(10).size() == 945);
  CHECK_THROWS_AS(perfect_matchings(5), std::domain_error);
  CHECK_THROWS_AS(perfect_matchings(18), CapacityError);
}

TEST_CASE("matching-derived branch matrices") {
  CHECK(same_matrix(matching_to_branch_matrix(Matching{{{1, 3}, {2, 4}}}),
                    kU2));
  CHECK(same_matrix(matching_to_branch_matrix(Matching{{{1, 2}, {3, 4}}}),
                    kU1));
  BranchMatrix two = matching_to_branch_matrix(Matching{{{1, 2}}});
  CHECK(two.m() == 2);
  CHECK(two.rows[0][0] == Scalar::rat(1));
  CHECK(two.rows[1][0] == Scalar::rat(-1));
}

TEST_CASE("hypersurface membership") {
  CHECK(subspace_in_hypersurface(kU1, elementary_symmetric(3, 4)));
  CHECK_FALSE(subspace_in_hypersurface(
      testutil::triangle_branches_float(),
      elementary_symmetric(2, 3, ScalarTag::floating)));
  CHECK_THROWS_AS(subspace_in_hypersurface(kU1, elementary_symmetric(2, 3)),
                  std::domain_error);
}

TEST_CASE("zero-row membership laws") {
  std::mt19937 rng(314);
  std::uniform_int_distribution<int> m_dist(4, 6), n_dist(1, 3),
      pos_dist(0, 100);
  for (int trial = 0; trial < 100; ++trial) {
    int m = m_dist(rng), n = n_dist(rng);
    BranchMatrix u = testutil::random_rational_matrix(m, n, rng);
    int i = pos_dist(rng) % m, j = (i + 1 + pos_dist(rng) % (m - 1)) % m;
    for (auto& v : u.rows[i]) v = Scalar::rat(0);
    for (auto& v : u.rows[j]) v = Scalar::rat(0);
    CHECK(subspace_in_hypersurface(u, elementary_symmetric(m - 1, m)));
  }
  for (int trial = 0; trial < 100; ++trial) {
    int m = m_dist(rng), n = n_dist(rng);
    BranchMatrix u = testutil::random_rational_matrix(m, n, rng);
    for (auto& v : u.rows[pos_dist(rng) % m]) v = Scalar::rat(0);
    CHECK_FALSE(subspace_in_hypersurface(u, elementary_symmetric(m - 1, m)));
  }
}

TEST_CASE("canonical subspace form") {
  CHECK(same_matrix(canonical_subspace(kU2).matrix, kU2));
  std::vector<std::vector<Scalar>> g = {{Scalar::rat(2), Scalar::rat(1)},
                                        {Scalar::rat(0), Scalar::rat(3)}};
  CHECK(same_matrix(canonical_subspace(multiply(kU2, g)).matrix, kU2));
  CHECK(same_matrix(canonical_subspace(kU1).matrix, kU1));

  BranchMatrix deficient = BranchMatrix::from_ints({{1, 2}, {2, 4}, {3, 6}});
  CHECK_THROWS_AS(canonical_subspace(deficient), std::domain_error);
}

TEST_CASE("canonical form is GL-invariant on random instances") {
  std::mt19937 rng(161);
  for (int trial = 0; trial < 100; ++trial) {
    BranchMatrix u = testutil::random_rational_matrix(5, 2, rng);
    BranchMatrix canon;
    try {
      canon = canonical_subspace(u).matrix;
    } catch (const std::domain_error&) {
      continue;  // rank-deficient draw
    }
    std::vector<std::vector<Scalar>> g;
    do {
      g = testutil::random_rational_matrix(2, 2, rng).rows;
    } while ((g[0][0] * g[1][1] - g[0][1] * g[1][0]).is_zero());
    CHECK(same_matrix(canonical_subspace(multiply(u, g)).matrix, canon));
  }
}

TEST_CASE("isolated subspace enumeration") {
  auto s1 = enumerate_isolated_subspaces(1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].matrix.rows[0][0] == Scalar::rat(1));
  CHECK(s1[0].matrix.rows[1][0] == Scalar::rat(-1));

  CHECK(enumerate_isolated_subspaces(2).size() == 3);
  CHECK(enumerate_isolated_subspaces(3).size() == 15);
  CHECK_THROWS_AS(enumerate_isolated_subspaces(9), CapacityError);
}

TEST_CASE("sign-permutation stabilizer has order 2^n n!") {
  for (int n = 1; n <= 3; ++n) {
    Matching mt;
    for (int t = 0; t < n; ++t) mt.pairs.push_back({2 * t + 1, 2 * t + 2});
    BranchMatrix u0 = matching_to_branch_matrix(mt);
    BranchMatrix canon = canonical_subspace(u0).matrix;

    // exhaustive signed permutation matrices
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int stab = 0, total = 0;
    std::sort(perm.begin(), perm.end());
    do {
      for (int signs = 0; signs < (1 << n); ++signs) {
        std::vector<std::vector<Scalar>> g(
            n, std::vector<Scalar>(n, Scalar::rat(0)));
        for (int i = 0; i < n; ++i)
          g[i][perm[i]] = Scalar::rat((signs >> i) & 1 ? -1 : 1);
        ++total;
        if (same_matrix(canonical_subspace(multiply(u0, g)).matrix, canon))
          ++stab;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    int expect = 1 << n;
    for (int i = 2; i <= n; ++i) expect *= i;
    CHECK(total == expect);  // all signed permutations
    CHECK(stab == expect);   // and every one stabilizes the subspace
  }
}

TEST_CASE("the nine lines of the Cayley cubic") {
  auto lines = cayley_lines();
  REQUIRE(lines.size() == 9);
  int singular = 0, smooth = 0;
  Polynomial e3 = elementary_symmetric(3, 4);
  for (const auto& line : lines) {
    CHECK(subspace_in_hypersurface(line.basis, e3));
    (line.kind == CayleyLineKind::singular ? singular : smooth)++;
  }
  CHECK(singular == 6);
  CHECK(smooth == 3);

  for (const auto& line : lines) {
    if (line.kind == CayleyLineKind::smooth &&
        line.matching.pairs == std::vector<std::pair<int, int>>{{1, 3},
                                                                {2, 4}})
      CHECK(same_matrix(line.basis, kU2));
    if (line.kind == CayleyLineKind::singular && line.label.first == 3 &&
        line.label.second == 4) {
      CHECK(line.basis.rows[0][0] == Scalar::rat(1));
      CHECK(line.basis.rows[1][1] == Scalar::rat(1));
      CHECK(line.basis.rows[2][0].is_zero());
      CHECK(line.basis.rows[3][1].is_zero());
    }
  }
}

TEST_CASE("chart equations for (4,2)") {
  ChartSystem cs = chart_equations(4, 2);
  CHECK(cs.unknowns == 4);
  REQUIRE(cs.equations.size() == 4);

  // unknowns (a,b,c,d) = W row-major; expected from expanding
  // e_3(xi1, xi2, a xi1 + b xi2, c xi1 + d xi2)
  auto poly = [&](std::vector<std::pair<std::vector<int>, int>> terms) {
    Polynomial p(4);
    for (auto& [e, c] : terms) p.add_term(Monomial{e}, Scalar::rat(c));
    return p;
  };
  Polynomial ac = poly({{{1, 0, 1, 0}, 1}});
  Polynomial bd = poly({{{0, 1, 0, 1}, 1}});
  Polynomial eq3 = poly({{{1, 0, 0, 0}, 1},
                         {{0, 0, 1, 0}, 1},
                         {{1, 0, 1, 0}, 1},
                         {{1, 0, 0, 1}, 1},
                         {{0, 1, 1, 0}, 1}});
  Polynomial eq4 = poly({{{0, 1, 0, 0}, 1},
                         {{0, 0, 0, 1}, 1},
                         {{0, 1, 0, 1}, 1},
                         {{1, 0, 0, 1}, 1},
                         {{0, 1, 1, 0}, 1}});
  auto contains = [&](const Polynomial& q) {
    for (const auto& eq : cs.equations)
      if (eq == q) return true;
    return false;
  };
  CHECK(contains(ac));
  CHECK(contains(bd));
  CHECK(contains(eq3));
  CHECK(contains(eq4));
}

TEST_CASE("chart equation counts") {
  CHECK(chart_equations(4, 2).equations.size() == 4);
  CHECK(chart_equations(6, 3).equations.size() == 21);
  CHECK(chart_equations(5, 2).equations.size() == 5);
}

TEST_CASE("chart solver finds the three Cayley chart points") {
  ChartSystem cs = chart_equations(4, 2);
  auto clusters = solve_chart_newton(cs, 500, 42);
  REQUIRE(clusters.size() == 3);

  std::vector<std::vector<double>> expected = {
      {0, 0, 0, 0}, {-1, 0, 0, -1}, {0, -1, -1, 0}};
  int matched_total = 0;
  for (const auto& want : expected) {
    for (const auto& c : clusters) {
      double dist = 0;
      for (std::size_t i = 0; i < want.size(); ++i)
        dist = std::max(dist, std::fabs(c.point[i] - want[i]));
      if (dist < 1e-6) {
        ++matched_total;
        CHECK(c.residual < 1e-12);
        CHECK(c.basin_count > 0);
      }
    }
  }
  CHECK(matched_total == 3);

  // another seed finds the same cluster set
  auto again = solve_chart_newton(cs, 500, 1234);
  REQUIRE(again.size() == 3);
  for (const auto& a : again) {
    bool found = false;
    for (const auto& c : clusters) {
      double dist = 0;
      for (std::size_t j = 0; j < 4; ++j)
        dist = std::max(dist, std::fabs(c.point[j] - a.point[j]));
      found |= dist < 1e-5;
    }
    CHECK(found);
  }

  // soundness: substituted back, each cluster lies in V(e_3)
  Polynomial e3f = elementary_symmetric(3, 4, ScalarTag::floating);
  for (const auto& c : clusters) {
    BranchMatrix u = chart_point_to_matrix(cs, c.point);
    CHECK(subspace_in_hypersurface(u, e3f, 1e-9));
  }
}

TEST_CASE("chart point reassembly") {
  ChartSystem cs = chart_equations(4, 2);
  BranchMatrix u = chart_point_to_matrix(cs, {-1, 0, 0, -1});
  CHECK(u.m() == 4);
  CHECK(u.rows[0][0].value() == doctest::Approx(1.0));
  CHECK(u.rows[1][1].value() == doctest::Approx(1.0));
  CHECK(u.rows[2][0].value() == doctest::Approx(-1.0));
  CHECK(u.rows[2][1].value() == doctest::Approx(0.0));
  CHECK(u.rows[3][0].value() == doctest::Approx(0.0));
  CHECK(u.rows[3][1].value() == doctest::Approx(-1.0));
}
