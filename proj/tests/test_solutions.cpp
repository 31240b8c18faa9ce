#include <doctest.h>

#include <choicelab/enumerate.hpp>
#include <choicelab/scf.hpp>
#include <choicelab/solutions.hpp>

using namespace choicelab;

namespace {

// ----- independent oracles, written from the definitions -----

// smallest set whose members all beat every outsider by strict majority
AltSet dominant_set_oracle(const MarginMatrix& g, AltSet a_set) {
  for (AltSet b_set : nonempty_subsets(a_set)) {
    bool dominant = true;
    for (Alt b : b_set.each())
      for (Alt a : a_set.minus(b_set).each())
        if (g.at(b, a) <= 0) dominant = false;
    if (dominant) return b_set;
  }
  return a_set;
}

// two-step reachability: x is uncovered iff it reaches everything in at
// most two strict-majority steps
AltSet uncovered_oracle(const MarginMatrix& g, AltSet a_set) {
  AltSet out;
  for (Alt x : a_set.each()) {
    bool reaches_all = true;
    for (Alt y : a_set.each()) {
      if (x == y || g.at(x, y) > 0) continue;
      bool two_step = false;
      for (Alt z : a_set.each())
        if (g.at(x, z) > 0 && g.at(z, y) > 0) two_step = true;
      if (!two_step) reaches_all = false;
    }
    if (reaches_all) out = out.with(x);
  }
  return out;
}

bool oracle_covers(const MarginMatrix& g, AltSet s, Alt x, Alt y) {
  if (g.at(x, y) <= 0) return false;
  for (Alt z : s.each())
    if (g.at(y, z) > 0 && g.at(x, z) <= 0) return false;
  return true;
}

bool oracle_is_covering(const MarginMatrix& g, AltSet b_set, AltSet a_set) {
  for (Alt a : a_set.minus(b_set).each()) {
    const AltSet scope = b_set.with(a);
    bool covered = false;
    for (Alt b : b_set.each())
      if (oracle_covers(g, scope, b, a)) covered = true;
    if (!covered) return false;
  }
  return true;
}

// all inclusion-minimal covering sets, independently of the library route
std::vector<AltSet> minimal_covering_oracle(const MarginMatrix& g, AltSet a_set) {
  std::vector<AltSet> covering;
  for (AltSet b_set : nonempty_subsets(a_set))
    if (oracle_is_covering(g, b_set, a_set)) covering.push_back(b_set);
  std::vector<AltSet> minimal;
  for (AltSet b : covering) {
    bool is_minimal = true;
    for (AltSet c : covering)
      if (c != b && c.subset_of(b)) is_minimal = false;
    if (is_minimal) minimal.push_back(b);
  }
  return minimal;
}

Profile strict_profile(const std::vector<std::vector<Alt>>& orders) {
  Profile p;
  const int m = static_cast<int>(orders.front().size());
  p.labels = default_labels(m);
  for (const auto& order : orders) {
    std::vector<std::vector<Alt>> tiers;
    for (Alt a : order) tiers.push_back({a});
    p.voters.push_back(Relation::from_tiers(m, tiers));
  }
  return p;
}

}  // namespace

TEST_CASE("score-based rules on hand-checked profiles") {
  // two voters agree on a; they split b against c
  const Profile p = strict_profile({{0, 1, 2}, {0, 2, 1}});
  const AltSet universe = AltSet::full(3);
  const MarginMatrix g = margin_matrix(p, universe);
  CHECK(copeland_set(g, universe) == AltSet::single(0));
  CHECK(borda_set(g, universe) == AltSet::single(0));
  CHECK(plurality_set(p, universe) == AltSet::single(0));
  CHECK(top_cycle(g, universe) == AltSet::single(0));
  CHECK(uncovered_set(g, AltSet::of({0, 1})) == AltSet::single(0));

  // cycle: every rule returns all three
  const Profile c = strict_profile({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  const MarginMatrix gc = margin_matrix(c, universe);
  for (auto fn : {copeland_set, borda_set, top_cycle, uncovered_set,
                  minimal_covering_set})
    CHECK(fn(gc, universe) == universe);
}

TEST_CASE("copeland and borda can disagree") {
  // margins where one alternative wins many pairings narrowly and another
  // wins fewer pairings by large margins
  MarginMatrix g;
  g.m = 4;
  g.voter_count = 5;
  g.scope = AltSet::full(4);
  g.g.assign(16, 0);
  auto set = [&](Alt a, Alt b, int v) {
    g.at(a, b) = v;
    g.at(b, a) = -v;
  };
  set(0, 1, 1);
  set(0, 2, 1);
  set(3, 0, 1);
  set(1, 2, 5);
  set(1, 3, 5);
  set(2, 3, 1);
  const AltSet universe = AltSet::full(4);
  // wins: 0 and 1 have two each, but 1 piles up margin
  CHECK(copeland_set(g, universe) == AltSet::of({0, 1}));
  CHECK(borda_set(g, universe) == AltSet::single(1));
}

TEST_CASE("plurality needs unique strict tops") {
  Profile p;
  p.labels = default_labels(3);
  p.voters = {Relation::from_tiers(3, {{0, 1}, {2}})};
  CHECK_THROWS_AS(plurality_set(p, p.universe()), PreconditionError);
  // the same voter has a unique top within {1, 2}
  CHECK(plurality_set(p, AltSet::of({1, 2})) == AltSet::single(1));
}

TEST_CASE("tournament-only entry points reject tied margins") {
  MarginMatrix g;
  g.m = 2;
  g.voter_count = 2;
  g.scope = AltSet::full(2);
  g.g.assign(4, 0);
  CHECK_THROWS_AS(uncovered_set(g, AltSet::full(2)), PreconditionError);
  CHECK_THROWS_AS(minimal_covering_set(g, AltSet::full(2)), PreconditionError);
  // the generalized forms stay total
  CHECK(uncovered_set_general(g, AltSet::full(2)) == AltSet::full(2));
  CHECK(minimal_covering_set_general(g, AltSet::full(2)) == AltSet::full(2));
}

TEST_CASE("solutions agree with independent oracles on all tournaments") {
  for (int m = 3; m <= 5; ++m) {
    const AltSet universe = AltSet::full(m);
    for (const MarginMatrix& t : enumerate_tournaments(m)) {
      CHECK(top_cycle(t, universe) == dominant_set_oracle(t, universe));
      CHECK(uncovered_set(t, universe) == uncovered_oracle(t, universe));
      CHECK(uncovered_set(t, universe) == uncovered_set_general(t, universe));
      const auto minimal = minimal_covering_oracle(t, universe);
      REQUIRE(minimal.size() == 1);
      CHECK(minimal_covering_set(t, universe) == minimal.front());
      CHECK(minimal_covering_set_general(t, universe) == minimal.front());
    }
  }
}

TEST_CASE("sign-based covering coincides with covering on tournaments") {
  const AltSet universe = AltSet::full(4);
  for (const MarginMatrix& t : enumerate_tournaments(4))
    for (Alt x : universe.each())
      for (Alt y : universe.each())
        if (x != y)
          CHECK(covers(t, universe, x, y) == covers_general(t, universe, x, y));
}

TEST_CASE("registry exposes exactly the documented vocabulary") {
  std::vector<std::string> keys;
  for (const ScfDescriptor& d : scf_registry()) keys.push_back(d.key);
  CHECK(keys == std::vector<std::string>{"copeland", "borda", "plurality",
                                         "topcycle", "uncovered", "mc", "bp"});
  CHECK(find_scf("plurality").pairwise == false);
  CHECK_THROWS_AS(find_scf("nosuch"), ValidationError);
}

TEST_CASE("pairwise SCFs are margin-functions by construction") {
  const Profile p = strict_profile({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  const Profile q = strict_profile({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});  // permuted voters
  for (const ScfDescriptor& d : scf_registry()) {
    if (!d.pairwise) continue;
    CHECK(apply_scf(d, p, p.universe()) == apply_scf(d, q, q.universe()));
  }
}

TEST_CASE("lexicographic wrapper picks the least member") {
  const ScfDescriptor lex = lex_tiebreak_wrapper(find_scf("topcycle"));
  CHECK(lex.key == "topcycle-lex");
  const Profile c = strict_profile({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(apply_scf(lex, c, c.universe()) == AltSet::single(0));
}

TEST_CASE("evaluator memoization returns identical results") {
  const ScfDescriptor& mc = find_scf("mc");
  ScfEvaluator eval(mc);
  for (const MarginMatrix& t : enumerate_tournaments(4)) {
    const AltSet universe = AltSet::full(4);
    const AltSet direct = mc.on_margins(t, universe);
    CHECK(eval.on_margins(t, universe) == direct);
    CHECK(eval.on_margins(t, universe) == direct);  // cached path
  }
}
