#include "recipes.hpp"

#include <sstream>

namespace choicelab::recipes {

namespace {

using io::label_list;
using io::serialize_participation_report;
using io::serialize_sweep_report;
using io::serialize_witness;
using io::with_checksum;

DomainSpec strict_domain(int n, int m) {
  return DomainSpec{.n = n, .m = m, .mode = RelationMode::StrictLinear};
}

ModeFlags strong_group_flags(int n) {
  return ModeFlags{.pref = PrefExtension::Weak,
                   .misreport = MisreportClass::IndifferencePreserving,
                   .require_outcome_change = true,
                   .max_group_size = n};
}

}  // namespace

ScfDescriptor resolve_scf(const std::string& key) {
  constexpr std::string_view suffix = "-lex";
  if (key.size() > suffix.size() &&
      key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0)
    return lex_tiebreak_wrapper(
        find_scf(key.substr(0, key.size() - suffix.size())));
  return find_scf(key);
}

std::vector<Artifact> thm1(const std::vector<std::string>& scf_keys,
                           const std::vector<int>& ms) {
  std::vector<Artifact> out;
  for (const std::string& key : scf_keys) {
    const ScfDescriptor scf = resolve_scf(key);
    for (int m : ms) {
      const Theorem1Result result = theorem1_attack(scf, m);
      const auto& labels = result.witness.truth.labels;
      std::ostringstream body;
      body << "kind: tie-refinement-attack\n";
      body << "scf: " << key << '\n';
      body << "m: " << m << '\n';
      body << "chosen-index: " << result.chosen_index << '\n';
      body << "lifted-index: " << result.lifted_index << '\n';
      body << "branch: " << (result.manipulation_at_truth ? "truth" : "refined")
           << '\n';
      body << "choice-r: " << label_list(result.choice_r, labels, false) << '\n';
      body << "choice-r1: " << label_list(result.choice_r1, labels, false) << '\n';
      body << "choice-r2: " << label_list(result.choice_r2, labels, false) << '\n';
      body << "condorcet-winner: "
           << labels[static_cast<std::size_t>(result.lifted_index)] << '\n';
      body << serialize_witness(key, result.witness);
      out.push_back({"thm1-" + key + "-m" + std::to_string(m) + ".txt",
                     with_checksum(body.str())});
    }
  }
  return out;
}

std::vector<Artifact> thm2(const std::vector<std::string>& scf_keys) {
  std::vector<Artifact> out;
  for (const std::string& key : scf_keys) {
    const ScfDescriptor scf = resolve_scf(key);
    std::string body;
    const DomainSpec strict3 = strict_domain(3, 3);
    body += serialize_sweep_report(
        key, strict3,
        check_group_strategyproofness(scf, strict3, strong_group_flags(3)));
    const DomainSpec weak2{.n = 2, .m = 3, .mode = RelationMode::WeakOrder};
    body += serialize_sweep_report(
        key, weak2,
        check_group_strategyproofness(scf, weak2, strong_group_flags(2)));
    out.push_back({"thm2-" + key + ".txt", with_checksum(std::move(body))});
  }
  return out;
}

std::vector<Artifact> thm3(const std::vector<std::string>& scf_keys) {
  std::vector<Artifact> out;
  for (const std::string& key : scf_keys) {
    const ScfDescriptor scf = resolve_scf(key);
    const AxiomReport report = check_set_monotonicity(scf, strict_domain(2, 3));
    if (!report.witness)
      throw InternalError(key + " shows no set-monotonicity failure on the strict n=2, m=3 domain");
    const ManipulationWitness attack = theorem3_attack(scf, *report.witness);
    std::string body = io::serialize_axiom_report(report);
    body += serialize_witness(key, attack);
    out.push_back({"thm3-" + key + ".txt", with_checksum(std::move(body))});
  }
  return out;
}

std::vector<Artifact> prop3() {
  std::string body;
  const DomainSpec domain = strict_domain(3, 3);

  for (const std::string key : {"mc", "bp", "topcycle"}) {
    const ScfDescriptor scf = resolve_scf(key);
    body += serialize_participation_report(key, domain,
                                           check_participation(scf, domain));
  }

  // appending a fully indifferent voter never changes a pairwise SCF
  for (const ScfDescriptor& scf : scf_registry()) {
    if (!scf.pairwise) continue;
    ScfEvaluator eval(scf);
    const auto subsets = nonempty_subsets(AltSet::full(domain.m));
    std::uint64_t instances = 0, changed = 0;
    for (int bn = 1; bn <= domain.n; ++bn) {
      DomainSpec base = domain;
      base.n = bn;
      for_each_profile(base, [&](const Profile& p) {
        Profile with = p;
        with.voters.push_back(Relation::full_indifference(p.m()));
        ++instances;
        for (AltSet a_set : subsets)
          if (eval(p, a_set) != eval(with, a_set)) ++changed;
        return true;
      });
    }
    body += "indifferent-voter-invariance: " + scf.key +
            (changed == 0 ? " pass" : " fail") +
            " instances=" + std::to_string(instances) + "\n";
  }

  // the resolute wrapper shows the no-show paradox and its reduction
  const ScfDescriptor lex = resolve_scf("topcycle-lex");
  const ParticipationReport no_show = check_participation(lex, domain);
  body += serialize_participation_report("topcycle-lex", domain, no_show);
  if (!no_show.witness)
    throw InternalError("lexicographic top-cycle wrapper shows no participation failure");
  body += serialize_witness("topcycle-lex",
                            prop3_reduction(lex, *no_show.witness));

  return {{"prop3.txt", with_checksum(std::move(body))}};
}

std::vector<Artifact> mctable(const std::vector<int>& ms) {
  std::vector<Artifact> out;
  const ScfDescriptor mc = find_scf("mc");
  for (int m : ms) {
    const auto labels = default_labels(m);
    const AltSet universe = AltSet::full(m);
    std::string body;
    const auto tournaments = enumerate_tournaments(m);
    for (std::size_t i = 0; i < tournaments.size(); ++i) {
      const AltSet choice = mc.on_margins(tournaments[i], universe);
      body += "m" + std::to_string(m) + "-t" + std::to_string(i) + "\tmc\t" +
              io::label_list(choice, labels, true) + "\n";
    }
    out.push_back({"mctable-m" + std::to_string(m) + ".txt", std::move(body)});
  }
  return out;
}

}  // namespace choicelab::recipes
