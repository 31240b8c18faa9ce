#include <doctest.h>

#include <choicelab/enumerate.hpp>
#include <choicelab/profile.hpp>

using namespace choicelab;

namespace {
Profile cycle3() {
  Profile p;
  p.labels = default_labels(3);
  p.voters = {Relation::from_tiers(3, {{0}, {1}, {2}}),
              Relation::from_tiers(3, {{1}, {2}, {0}}),
              Relation::from_tiers(3, {{2}, {0}, {1}})};
  return p;
}
}  // namespace

TEST_CASE("margin matrix of the majority cycle") {
  const Profile p = cycle3();
  const MarginMatrix g = margin_matrix(p, p.universe());
  CHECK(g.at(0, 1) == 1);
  CHECK(g.at(1, 2) == 1);
  CHECK(g.at(2, 0) == 1);
  CHECK(g.at(1, 0) == -1);
  CHECK(g.voter_count == 3);
  CHECK(g.odd_electorate());
  CHECK(g.is_tournament_on(p.universe()));
  CHECK(!condorcet_winner(g, p.universe()));
}

TEST_CASE("margins are skew-symmetric and indifference contributes nothing") {
  Profile p = cycle3();
  p.voters.push_back(Relation::full_indifference(3));
  const MarginMatrix g = margin_matrix(p, p.universe());
  for (Alt a = 0; a < 3; ++a) {
    CHECK(g.at(a, a) == 0);
    for (Alt b = 0; b < 3; ++b) CHECK(g.at(a, b) == -g.at(b, a));
  }
  CHECK(g.at(0, 1) == 1);  // unchanged by the indifferent voter
  CHECK(g.voter_count == 4);
  CHECK(!g.odd_electorate());
}

TEST_CASE("condorcet winner detection") {
  Profile p;
  p.labels = default_labels(3);
  p.voters = {Relation::from_tiers(3, {{1}, {0}, {2}}),
              Relation::from_tiers(3, {{1}, {2}, {0}}),
              Relation::from_tiers(3, {{0}, {1}, {2}})};
  const MarginMatrix g = margin_matrix(p, p.universe());
  const auto cw = condorcet_winner(g, p.universe());
  REQUIRE(cw.has_value());
  CHECK(*cw == 1);
  // within {0,2} the winner is 0
  const auto sub = condorcet_winner(g, AltSet::of({0, 2}));
  REQUIRE(sub.has_value());
  CHECK(*sub == 0);
}

TEST_CASE("tied margins are reported") {
  Profile p;
  p.labels = default_labels(3);
  p.voters = {Relation::from_tiers(3, {{0}, {1}, {2}}),
              Relation::from_tiers(3, {{1}, {0}, {2}})};
  const MarginMatrix g = margin_matrix(p, p.universe());
  CHECK(!g.is_tournament_on(p.universe()));
  const auto tied = g.tied_pair_on(p.universe());
  REQUIRE(tied.has_value());
  CHECK(tied->first == 0);
  CHECK(tied->second == 1);
  CHECK(g.is_tournament_on(AltSet::of({0, 2})));
}

TEST_CASE("restrict commutes with margin computation") {
  const DomainSpec spec{.n = 2, .m = 4, .mode = RelationMode::WeakOrder};
  const auto subsets = nonempty_subsets(AltSet::full(4));
  int seen = 0;
  for_each_profile(spec, [&](const Profile& p) {
    for (AltSet a_set : subsets) {
      const MarginMatrix direct = margin_matrix(p, a_set).submatrix(a_set);
      const Profile reduced = restrict(p, a_set);
      const MarginMatrix via = margin_matrix(reduced, reduced.universe());
      CHECK(direct.equal_on(via, reduced.universe()));
    }
    return ++seen < 500;  // a deterministic prefix is plenty
  });
}

TEST_CASE("profile validation") {
  Profile p = cycle3();
  p.validate();
  p.voters.push_back(Relation::full_indifference(4));
  CHECK_THROWS_AS(p.validate(), ValidationError);
  Profile q = cycle3();
  q.labels[1] = q.labels[0];
  CHECK_THROWS_AS(q.validate(), ValidationError);
  CHECK(cycle3().index_of("c") == 2);
  CHECK_THROWS_AS(cycle3().index_of("z"), ValidationError);
}

TEST_CASE("profile counts and capping") {
  DomainSpec spec{.n = 3, .m = 3, .mode = RelationMode::StrictLinear};
  CHECK(profile_count(spec) == 216);
  spec.mode = RelationMode::WeakOrder;
  spec.n = 2;
  CHECK(profile_count(spec) == 169);

  std::uint64_t seen = 0;
  for_each_profile(spec, [&](const Profile&) {
    ++seen;
    return true;
  });
  CHECK(seen == 169);

  spec.cap = 10;
  CHECK_THROWS_AS(for_each_profile(spec, [&](const Profile&) { return true; }),
                  CapExceededError);
}

TEST_CASE("sampled enumeration is seed-deterministic") {
  DomainSpec spec{.n = 3,
                  .m = 4,
                  .mode = RelationMode::GeneralComplete,
                  .style = EnumStyle::Sampled,
                  .samples = 25,
                  .seed = 42};
  std::vector<std::uint64_t> first, second;
  for_each_profile(spec, [&](const Profile& p) {
    first.push_back(p.voters[0].code());
    return true;
  });
  for_each_profile(spec, [&](const Profile& p) {
    second.push_back(p.voters[0].code());
    return true;
  });
  CHECK(first.size() == 25);
  CHECK(first == second);
}
