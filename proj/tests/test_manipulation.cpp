#include <doctest.h>

#include <choicelab/io.hpp>
#include <choicelab/manipulation.hpp>

using namespace choicelab;

namespace {

const DomainSpec kStrict3x3{.n = 3, .m = 3, .mode = RelationMode::StrictLinear};

ModeFlags strong_flags(int group) {
  return ModeFlags{.pref = PrefExtension::Weak,
                   .misreport = MisreportClass::IndifferencePreserving,
                   .require_outcome_change = true,
                   .max_group_size = group};
}

}  // namespace

TEST_CASE("the 3m-voter construction has the expected margins") {
  const Profile p = theorem1_profile(3);
  CHECK(p.n() == 9);
  const MarginMatrix g = margin_matrix(p, p.universe());
  CHECK(g.at(0, 1) == 1);
  CHECK(g.at(1, 2) == 1);
  CHECK(g.at(0, 2) == -1);  // the cycle closes against the first alternative
  CHECK_THROWS_AS(theorem1_profile(2), ValidationError);

  for (int m = 3; m <= 5; ++m) {
    const Profile q = theorem1_profile(m);
    CHECK(q.n() == 3 * m);
    const MarginMatrix gq = margin_matrix(q, q.universe());
    // cyclic structure: each alternative beats its successor by one
    for (Alt k = 0; k < m; ++k) CHECK(gq.at(k, (k + 1) % m) == 1);
  }
}

TEST_CASE("the serialized construction round-trips through the text format") {
  const Profile p = theorem1_profile(3);
  const Profile q = io::parse_profile(io::serialize_profile(p));
  CHECK(q.labels == p.labels);
  CHECK(q.voters == p.voters);
}

TEST_CASE("tie-refinement attacks succeed with the recorded branches") {
  struct Expected {
    const char* key;
    bool truth_branch_m3, truth_branch_m4, truth_branch_m5;
  };
  // branch bookkeeping pinned from an independent prototype of the search
  const Expected table[] = {
      {"copeland", true, true, true},
      {"bp", true, true, true},
      {"topcycle", false, false, false},
      {"uncovered", false, true, true},
      {"mc", false, true, true},
  };
  for (const Expected& e : table) {
    const ScfDescriptor& scf = find_scf(e.key);
    for (int m = 3; m <= 5; ++m) {
      const Theorem1Result r = theorem1_attack(scf, m);
      const bool expected = m == 3   ? e.truth_branch_m3
                            : m == 4 ? e.truth_branch_m4
                                     : e.truth_branch_m5;
      CHECK(r.manipulation_at_truth == expected);
      CHECK(r.witness.verified);
      CHECK(r.witness.group.size() == 1);
      // the final refinement elects the lifted alternative outright
      CHECK(r.choice_r2 == AltSet::single(r.lifted_index));
    }
  }
  // specific frozen choice sets at m=3
  CHECK(theorem1_attack(find_scf("copeland"), 3).choice_r1 == AltSet::single(2));
  CHECK(theorem1_attack(find_scf("bp"), 3).choice_r1 == AltSet::of({1, 2}));
}

TEST_CASE("attacks are refused for non-Condorcet-extensions") {
  CHECK_THROWS_AS(theorem1_attack(find_scf("borda"), 3), PreconditionError);
}

TEST_CASE("verification recomputes everything and catches tampering") {
  const Theorem1Result r = theorem1_attack(find_scf("copeland"), 3);
  ManipulationWitness w = r.witness;
  CHECK(verify_manipulation(find_scf("copeland"), w));

  SUBCASE("wrong outcome recorded") {
    w.after = w.before;
    CHECK(!verify_manipulation(find_scf("copeland"), w));
    CHECK(!w.verified);
  }
  SUBCASE("misreport outside the group") {
    const int other = (w.group[0] + 1) % w.truth.n();
    w.misreport.voters[other] = Relation::full_indifference(3);
    CHECK(!verify_manipulation(find_scf("copeland"), w));
  }
  SUBCASE("indifference preservation is enforced when claimed") {
    w.flags.misreport = MisreportClass::IndifferencePreserving;
    // the constructed misreport breaks a tie of the truthful relation
    CHECK(!verify_manipulation(find_scf("copeland"), w));
  }
  SUBCASE("malformed group") {
    w.group = {0, 0};
    CHECK_THROWS_AS(verify_manipulation(find_scf("copeland"), w),
                    ValidationError);
  }
}

TEST_CASE("set-monotonicity failures convert to added-voter manipulations") {
  for (const std::string key : {"copeland", "borda"}) {
    const ScfDescriptor& scf = find_scf(key);
    const DomainSpec domain{.n = 2, .m = 3, .mode = RelationMode::StrictLinear};
    const AxiomReport report = check_set_monotonicity(scf, domain);
    REQUIRE(report.witness.has_value());
    const ManipulationWitness attack = theorem3_attack(scf, *report.witness);
    CHECK(attack.verified);
    CHECK(attack.truth.n() == 3);  // the two original voters plus the joiner
    CHECK(attack.group == std::vector<int>{2});
    CHECK(attack.flags.pref == PrefExtension::Weak);
    CHECK(attack.flags.misreport == MisreportClass::IndifferencePreserving);
    // the joiner is indifferent everywhere except possibly the critical pair
    const Relation& joiner = attack.truth.voters[2];
    int nontrivial = 0;
    for (Alt a = 0; a < 3; ++a)
      for (Alt b = a + 1; b < 3; ++b)
        if (!joiner.indifferent(a, b)) ++nontrivial;
    CHECK(nontrivial <= 1);
  }
  CHECK_THROWS_AS(theorem3_attack(find_scf("plurality"), AxiomWitness{}),
                  PreconditionError);
}

TEST_CASE("direct manipulation search finds and misses correctly") {
  SUBCASE("single voters cannot manipulate mc under strong flags") {
    const Profile p = theorem1_profile(3);
    CHECK(!find_manipulation(find_scf("mc"), p, p.universe(), strong_flags(1))
               .has_value());
  }
  SUBCASE("the added-voter attack is rediscovered by the search") {
    const ScfDescriptor& scf = find_scf("copeland");
    const DomainSpec domain{.n = 2, .m = 3, .mode = RelationMode::StrictLinear};
    const AxiomReport report = check_set_monotonicity(scf, domain);
    REQUIRE(report.witness.has_value());
    const ManipulationWitness planted = theorem3_attack(scf, *report.witness);
    auto found = find_manipulation(scf, planted.truth, planted.feasible,
                                   strong_flags(1));
    REQUIRE(found.has_value());
    ManipulationWitness check = *found;
    CHECK(verify_manipulation(scf, check));
  }
  SUBCASE("the candidate cap aborts the search") {
    const Profile p = theorem1_profile(3);
    CHECK_THROWS_AS(
        find_manipulation(find_scf("mc"), p, p.universe(), strong_flags(2), 50),
        CapExceededError);
  }
}

TEST_CASE("group sweeps certify strategyproofness exhaustively") {
  // tiny domain version of the full desk-scale sweep
  const DomainSpec domain{.n = 2, .m = 3, .mode = RelationMode::StrictLinear};
  for (const std::string key : {"mc", "bp", "topcycle"}) {
    const SweepReport report =
        check_group_strategyproofness(find_scf(key), domain, strong_flags(2));
    CHECK(report.pass);
    CHECK(report.exhaustive);
    CHECK(report.profiles_checked == 36);
  }
}

TEST_CASE("participation and its abstention reduction") {
  for (const std::string key : {"mc", "bp", "topcycle"}) {
    const ParticipationReport report =
        check_participation(find_scf(key), kStrict3x3);
    CHECK(report.pass);
    CHECK(report.exhaustive);
  }

  const ScfDescriptor lex = lex_tiebreak_wrapper(find_scf("topcycle"));
  const ParticipationReport no_show = check_participation(lex, kStrict3x3);
  CHECK(!no_show.pass);
  REQUIRE(no_show.witness.has_value());
  const ParticipationWitness& w = *no_show.witness;
  CHECK(w.base.n() == 1);  // already a one-voter base shows the paradox
  // the abstainer strictly prefers the outcome without their ballot
  CHECK(kelly_strict(w.without_joiner, w.with_joiner, w.joiner));

  const ManipulationWitness reduction = prop3_reduction(lex, w);
  CHECK(reduction.verified);
  CHECK(reduction.misreport.voters.back() ==
        Relation::full_indifference(w.base.m()));
  CHECK(reduction.flags.pref == PrefExtension::Strict);
}
