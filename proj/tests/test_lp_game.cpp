#include <doctest.h>

#include <choicelab/enumerate.hpp>
#include <choicelab/game.hpp>

using namespace choicelab;

namespace {

MarginMatrix cycle3_margins() {
  MarginMatrix g;
  g.m = 3;
  g.voter_count = 3;
  g.scope = AltSet::full(3);
  g.g.assign(9, 0);
  g.at(0, 1) = 1;
  g.at(1, 0) = -1;
  g.at(1, 2) = 1;
  g.at(2, 1) = -1;
  g.at(2, 0) = 1;
  g.at(0, 2) = -1;
  return g;
}

// independent certificate check, written out from the definition
bool certify(const MixedStrategy& s, const MarginMatrix& g, AltSet a_set) {
  Rational total = 0;
  for (const Rational& pi : s.p) {
    if (pi < 0) return false;
    total += pi;
  }
  if (total != 1) return false;
  if (s.alts != a_set.members()) return false;
  for (Alt b : a_set.each()) {
    Rational column = 0;
    for (std::size_t i = 0; i < s.alts.size(); ++i)
      column += s.p[i] * g.at(s.alts[i], b);
    if (column < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("simplex solves small exact programs") {
  SUBCASE("bounded maximum at a vertex") {
    // max x0 + x1  s.t. x0 <= 2, x1 <= 3
    const auto r = solve_lp({{1, 0}, {0, 1}}, {2, 3}, {}, {}, {1, 1});
    REQUIRE(r.feasible);
    CHECK(!r.unbounded);
    CHECK(r.objective == 5);
    CHECK(r.x == std::vector<Rational>{2, 3});
  }
  SUBCASE("equality constraints") {
    // max x0  s.t. x0 + x1 = 1
    const auto r = solve_lp({}, {}, {{1, 1}}, {1}, {1, 0});
    REQUIRE(r.feasible);
    CHECK(r.objective == 1);
  }
  SUBCASE("infeasible program") {
    const auto r = solve_lp({{1}}, {-1}, {}, {}, {1});
    CHECK(!r.feasible);
  }
  SUBCASE("unbounded program") {
    const auto r = solve_lp({}, {}, {}, {}, {1});
    REQUIRE(r.feasible);
    CHECK(r.unbounded);
  }
  SUBCASE("fractional optimum is exact") {
    // max x0 s.t. 3 x0 <= 1
    const auto r = solve_lp({{3}}, {1}, {}, {}, {1});
    REQUIRE(r.feasible);
    CHECK(r.objective == Rational(1, 3));
  }
}

TEST_CASE("majority cycle equilibrium is the exact uniform lottery") {
  const MarginMatrix g = cycle3_margins();
  const AltSet universe = AltSet::full(3);
  const MixedStrategy s = maximin_strategy(g, universe);
  REQUIRE(s.p.size() == 3);
  for (const Rational& pi : s.p) CHECK(pi == Rational(1, 3));
  CHECK(is_optimal_strategy(s, g, universe));
  CHECK(certify(s, g, universe));
  CHECK(bipartisan_set(g, universe) == universe);
}

TEST_CASE("Condorcet winners get the pure strategy and singleton support") {
  for (const MarginMatrix& t : enumerate_tournaments(4)) {
    const AltSet universe = AltSet::full(4);
    const auto cw = condorcet_winner(t, universe);
    if (!cw) continue;
    const MixedStrategy s = maximin_strategy(t, universe);
    CHECK(s.weight(*cw) == 1);
    CHECK(bipartisan_set(t, universe) == AltSet::single(*cw));
  }
}

TEST_CASE("equilibrium certificates hold on every m=4 tournament") {
  const AltSet universe = AltSet::full(4);
  for (const MarginMatrix& t : enumerate_tournaments(4)) {
    const MixedStrategy s = maximin_strategy(t, universe);
    CHECK(certify(s, t, universe));
    // odd support on tournaments with an odd electorate
    int support = 0;
    for (const Rational& pi : s.p)
      if (pi > 0) ++support;
    CHECK(support % 2 == 1);
  }
}

TEST_CASE("support weights bound the equilibrium probabilities") {
  const MarginMatrix g = cycle3_margins();
  const AltSet universe = AltSet::full(3);
  for (Alt a = 0; a < 3; ++a) {
    const Rational w = max_support_weight(g, universe, a);
    CHECK(w >= Rational(1, 3));
    CHECK(w <= 1);
  }
  // a dominated alternative gets weight zero in every optimal strategy
  MarginMatrix t = cycle3_margins();
  t.at(0, 1) = 3;
  t.at(1, 0) = -3;
  t.at(2, 1) = 3;
  t.at(1, 2) = -3;
  t.at(0, 2) = 1;
  t.at(2, 0) = -1;  // 0 beats both; Condorcet winner
  CHECK(max_support_weight(t, universe, 1) == 0);
  CHECK(max_support_weight(t, universe, 0) == 1);
}

TEST_CASE("restricted feasible sets solve the subgame") {
  const MarginMatrix g = cycle3_margins();
  const AltSet pair = AltSet::of({0, 1});
  const MixedStrategy s = maximin_strategy(g, pair);
  CHECK(s.weight(0) == 1);  // 0 beats 1 head to head
  CHECK(bipartisan_set(g, pair) == AltSet::single(0));
}
