#include <doctest.h>

#include <vector>

#include "lhsolve/lemke_howson.hpp"
#include "lhsolve/verification.hpp"
#include "support/oracles.hpp"

using namespace lhsolve;
using namespace lhsolve::testing;

namespace {

Matrix<double> rows(Index r, Index c, std::initializer_list<double> v) {
  Matrix<double> out(r, c);
  Index k = 0;
  for (double x : v) out(k / c, k % c) = x, ++k;
  return out;
}

std::vector<BasicId> ids(std::initializer_list<int> v) {
  std::vector<BasicId> out;
  for (int k : v) out.emplace_back(k);
  return out;
}

}  // namespace

TEST_CASE("init_tableaux reproduces the worked-example tableaux") {
  const auto t = init_tableaux(example_game());
  CHECK(t.dense(0) == rows(3, 7, {-1, 1, 0, 0, 0, -1, -2,  //
                                  -2, 1, 0, 0, 0, -3, -4,  //
                                  -3, 1, 0, 0, 0, -5, -6}));
  CHECK(t.dense(1) == rows(2, 7, {-4, 1, 0, 0, -7, -9, -11,  //
                                  -5, 1, 0, 0, -8, -10, -12}));
  CHECK(t.is_artificial());
  CHECK(t.completely_labeled());
}

TEST_CASE("init_tableaux on a 1x1 game") {
  const auto t = init_tableaux(one_by_one_game());
  CHECK(t.dense(0) == rows(1, 4, {-1, 1, 0, -5}));
  CHECK(t.dense(1) == rows(1, 4, {-2, 1, 0, -7}));
}

TEST_CASE("init_tableaux requires positive payoffs") {
  CHECK_THROWS_AS(init_tableaux(matching_pennies()), PreconditionError);
  CHECK_THROWS_AS(init_tableaux(battle_of_sexes()), PreconditionError);
}

TEST_CASE("column layout follows labels") {
  const TableauPair<double> t(3, 2);
  // first tableau: s1..s3 then y4, y5
  CHECK(t.in_first(BasicId(-1)));
  CHECK(t.in_first(BasicId(5)));
  CHECK(t.column_of(BasicId(-3)) == 3);
  CHECK(t.column_of(BasicId(4)) == 4);
  // second tableau: s4, s5 then x1..x3
  CHECK_FALSE(t.in_first(BasicId(2)));
  CHECK_FALSE(t.in_first(BasicId(-4)));
  CHECK(t.column_of(BasicId(-4)) == 1);
  CHECK(t.column_of(BasicId(-5)) == 2);
  CHECK(t.column_of(BasicId(1)) == 3);
  CHECK(t.column_of(BasicId(3)) == 5);
}

TEST_CASE("pivot_step on the worked example game") {
  const auto g = example_game();
  auto t = init_tableaux(g);

  // x3 enters: ratios 1/11 (s4) and 1/12 (s5).
  CHECK(pivot_step(t, BasicId(3)) == BasicId(-5));
  CHECK(t.second().basis == ids({-4, 3}));
  const auto x_block = basic_solution(g, t.second().basis, false);
  CHECK(t.value_of(BasicId(3)) == doctest::Approx(1.0 / 12.0));
  CHECK(t.value_of(BasicId(3)) == doctest::Approx(x_block(1)));
  CHECK(t.value_of(BasicId(-4)) == doctest::Approx(x_block(0)));
  CHECK(row_equation_residual(g, t) <= 1e-12);

  // y5 enters: ratios 1/2, 1/4, 1/6.
  CHECK(pivot_step(t, BasicId(5)) == BasicId(-3));
  CHECK(t.first().basis == ids({-1, -2, 5}));
  const auto y_block = basic_solution(g, t.first().basis, true);
  CHECK(t.value_of(BasicId(5)) == doctest::Approx(1.0 / 6.0));
  for (Index r = 0; r < 3; ++r)
    CHECK(t.first().value(r) == doctest::Approx(y_block(r)));
  CHECK(t.completely_labeled());
}

TEST_CASE("pivot_step on a 1x1 game") {
  auto t = init_tableaux(one_by_one_game());
  CHECK(pivot_step(t, BasicId(1)) == BasicId(-2));
  CHECK(t.value_of(BasicId(1)) == doctest::Approx(1.0 / 7.0));
}

TEST_CASE("pivot_step keeps the entering column zero and rescales the row") {
  const auto g = random_positive_game(4, 5, 99);
  auto t = init_tableaux(g);
  const BasicId entering(2);
  const Index col = t.column_of(entering);
  const BasicId leaving = pivot_step(t, entering);
  const auto& tab = t.tableau_of(entering);
  CHECK(tab.body.col(col).cwiseAbs().maxCoeff() == 0.0);
  const Index row = t.row_of(entering);
  REQUIRE(row >= 0);
  // Leaving variable now carries coefficient 1/e in the pivot row.
  CHECK(tab.body(row, t.column_of(leaving)) ==
        doctest::Approx(-1.0 / g.B()(1, leaving.label().value() - g.m() - 1)));
}

TEST_CASE("ratio ties go to the smallest label") {
  // Both rows of the second tableau give ratio 1/2 when x1 enters.
  Matrix<double> a(1, 2), b(1, 2);
  a << 1, 1;
  b << 2, 2;
  auto t = init_tableaux(Game(a, b));
  CHECK(pivot_step(t, BasicId(1)) == BasicId(-2));
}

TEST_CASE("pivot_step detects an unbounded entering column") {
  TableauPair<double> t(1, 1);
  t.first().basis.push_back(BasicId(-1));
  t.second().basis.push_back(BasicId(-2));
  t.first().body << 1, 0, 0;  // y2 has no negative coefficient
  CHECK_THROWS_AS(pivot_step(t, BasicId(2)), UnboundedRay);
}

TEST_CASE("run_lh on the worked example game") {
  const auto g = example_game();
  SUBCASE("label 3") {
    const auto r = run_lh(g, Label(3));
    CHECK_FALSE(r.truncated);
    CHECK(r.path_steps == 2);
    CHECK(r.total_steps == 2);
    REQUIRE(r.equilibrium);
    CHECK(profile_distance(r.equilibrium->profile, profile({0, 0, 1}, {0, 1})) ==
          0.0);
  }
  SUBCASE("label 1") {
    const auto r = run_lh(g, Label(1));
    CHECK(r.path_steps == 3);
    REQUIRE(r.equilibrium);
    CHECK(profile_distance(r.equilibrium->profile, profile({0, 0, 1}, {0, 1})) <=
          1e-15);
  }
  SUBCASE("every label") {
    const std::vector<int> expected{3, 3, 2, 3, 2};
    for (int k = 1; k <= 5; ++k) CHECK(run_lh(g, Label(k)).path_steps == expected[k - 1]);
  }
  SUBCASE("truncation") {
    const auto r = run_lh(g, Label(3), 1);
    CHECK(r.truncated);
    CHECK_FALSE(r.equilibrium);
    CHECK(r.path_steps == 1);
  }
  SUBCASE("bad arguments") {
    CHECK_THROWS_AS(run_lh(g, Label(0)), InvalidInput);
    CHECK_THROWS_AS(run_lh(g, Label(6)), InvalidInput);
    CHECK_THROWS_AS(run_lh(g, Label(1), 0), InvalidInput);
  }
}

TEST_CASE("run_lh agrees with the support enumeration oracle on the worked example") {
  const auto oracle = solve_support_enumeration(example_game());
  REQUIRE(oracle.size() == 1);
  const auto r = run_lh(example_game(), Label(3));
  CHECK(distance_to_set(r.equilibrium->profile, oracle) <= 1e-12);
}

TEST_CASE("run_lh works in long double") {
  const BasicGame<long double> g(example_game().A().cast<long double>(),
                                 example_game().B().cast<long double>());
  const auto r = run_lh(g, Label(1));
  CHECK(r.path_steps == 3);
  CHECK(r.equilibrium->profile.x(2) == 1.0L);
}

TEST_CASE("extract_equilibrium") {
  const auto g = example_game();
  SUBCASE("traced terminal basis") {
    auto t = init_tableaux(g);
    pivot_step(t, BasicId(3));
    pivot_step(t, BasicId(5));
    const auto eq = extract_equilibrium(t, g);
    CHECK(eq.profile.x == profile({0, 0, 1}, {0, 1}).x);
    CHECK(eq.profile.y == profile({0, 0, 1}, {0, 1}).y);
    CHECK(eq.payoff_row == 6.0);
    CHECK(eq.payoff_col == 12.0);
  }
  SUBCASE("1x1") {
    const auto h = one_by_one_game();
    auto t = init_tableaux(h);
    pivot_step(t, BasicId(1));
    pivot_step(t, BasicId(2));
    CHECK(t.value_of(BasicId(1)) == doctest::Approx(1.0 / 7.0));
    CHECK(t.value_of(BasicId(2)) == doctest::Approx(1.0 / 5.0));
    const auto eq = extract_equilibrium(t, h);
    CHECK(eq.profile.x(0) == 1.0);
    CHECK(eq.profile.y(0) == 1.0);
  }
  SUBCASE("artificial basis") {
    CHECK_THROWS_AS(extract_equilibrium(init_tableaux(g), g),
                    ArtificialEquilibrium);
  }
  SUBCASE("almost complementary basis") {
    auto t = init_tableaux(g);
    pivot_step(t, BasicId(3));  // x3 and s3 both basic
    CHECK_FALSE(t.completely_labeled());
    CHECK_THROWS_AS(extract_equilibrium(t, g), PreconditionError);
  }
}

TEST_CASE("enumerate_reachable") {
  SUBCASE("worked example game has one equilibrium") {
    const auto eqs = enumerate_reachable(example_game());
    REQUIRE(eqs.size() == 1);
    CHECK(profile_distance(eqs[0].profile, profile({0, 0, 1}, {0, 1})) <= 1e-15);
  }
  SUBCASE("1x1") {
    const auto eqs = enumerate_reachable(one_by_one_game());
    REQUIRE(eqs.size() == 1);
    CHECK(eqs[0].profile.x(0) == 1.0);
  }
  SUBCASE("battle of the sexes") {
    const auto eqs = enumerate_reachable(normalize_game(battle_of_sexes()));
    REQUIRE(eqs.size() == 3);
    CHECK(profile_distance(eqs[0].profile, profile({0, 1}, {0, 1})) <= 1e-12);
    CHECK(profile_distance(eqs[1].profile,
                           profile({2.0 / 3, 1.0 / 3}, {1.0 / 3, 2.0 / 3})) <=
          1e-12);
    CHECK(profile_distance(eqs[2].profile, profile({1, 0}, {1, 0})) <= 1e-12);
  }
  SUBCASE("artificial-only exploration is a subset") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const auto g = random_positive_game(5, 5, seed);
      const auto all = enumerate_reachable(g);
      const auto direct = enumerate_reachable(g, {.from_artificial_only = true});
      CHECK(direct.size() <= all.size());
      for (const auto& eq : direct)
        CHECK(distance_to_set(eq.profile, all) <= 1e-9);
    }
  }
}

TEST_CASE("path invariants on random 10x10 games") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto g = random_positive_game(10, 10, 1000 + seed);
    const int k = 1 + static_cast<int>(seed % 20);
    ComplementaryPath<double> path(g, Label(k));
    BasicId expected_entering = BasicId::variable(Label(k));
    double worst_residual = 0, worst_value = 0;
    bool chain_ok = true;
    while (!path.done()) {
      chain_ok &= path.next_entering() == expected_entering;
      const BasicId leaving = path.step();
      expected_entering = leaving.complement();
      worst_residual = std::max(worst_residual, row_equation_residual(g, path.tableaux()));
      for (const auto* tab : {&path.tableaux().first(), &path.tableaux().second()})
        worst_value = std::min(worst_value, tab->body.col(0).minCoeff());
    }
    CHECK(chain_ok);
    CHECK(worst_residual <= 1e-7);
    CHECK(worst_value >= -1e-9);
    CHECK(path.tableaux().completely_labeled());
    CHECK(path.steps() >= 2);
  }
}

TEST_CASE("two-step paths end at pure equilibria") {
  int two_step = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto g = random_positive_game(6, 6, seed);
    for (int k = 1; k <= 12; ++k) {
      const auto r = run_lh(g, Label(k));
      CHECK(r.path_steps >= 2);
      if (r.path_steps == 2) {
        ++two_step;
        CHECK(r.equilibrium->is_pure());
      }
    }
  }
  CHECK(two_step > 0);
}

TEST_CASE("run_lh matches the oracle on 500 random 5x5 games") {
  int mismatches = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto g = random_positive_game(5, 5, 50000 + seed);
    const auto oracle = solve_support_enumeration(g);
    const auto r = run_lh(g, Label(1 + static_cast<int>(seed % 10)));
    if (distance_to_set(r.equilibrium->profile, oracle) > 1e-6) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("run_lh is deterministic") {
  const auto g = random_positive_game(15, 15, 5);
  const auto a = run_lh(g, Label(7));
  const auto b = run_lh(g, Label(7));
  CHECK(a.path_steps == b.path_steps);
  CHECK(a.equilibrium->profile.x == b.equilibrium->profile.x);
}
