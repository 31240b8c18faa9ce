#pragma once

#include <optional>
#include <vector>

#include "choicelab/axioms.hpp"
#include "choicelab/enumerate.hpp"
#include "choicelab/scf.hpp"

namespace choicelab {

enum class PrefExtension { Weak, Strict };          // Kelly R-hat vs P-hat
enum class MisreportClass { Unrestricted, IndifferencePreserving };

struct ModeFlags {
  PrefExtension pref = PrefExtension::Weak;
  MisreportClass misreport = MisreportClass::Unrestricted;
  bool require_outcome_change = true;
  int max_group_size = 1;
};

// A verified attack: the group's joint misreport moves the choice set to one
// every member weakly (or strictly) Kelly-prefers under their TRUE relation.
struct ManipulationWitness {
  AltSet feasible;
  Profile truth;
  Profile misreport;
  std::vector<int> group;  // 0-based voter indices, ascending
  ModeFlags flags;
  AltSet before;
  AltSet after;
  bool verified = false;
};

// Recomputes both choice sets and every constraint from scratch.
bool verify_manipulation(const ScfDescriptor& scf, ManipulationWitness& witness);

// Deterministic search: groups by ascending size then lexicographic
// membership, joint misreports over general-complete relations in
// enumeration order (restricted by the misreport class). First witness wins.
std::optional<ManipulationWitness> find_manipulation(
    const ScfDescriptor& scf, const Profile& profile, AltSet a_set,
    const ModeFlags& flags, std::uint64_t cap = 100'000'000);

struct SweepReport {
  bool pass = true;
  std::optional<ManipulationWitness> witness;
  std::uint64_t profiles_checked = 0;
  std::uint64_t candidates_evaluated = 0;
  std::uint64_t skipped = 0;
  bool exhaustive = false;
};

// find_manipulation over every (profile, feasible set) of the domain.
SweepReport check_group_strategyproofness(const ScfDescriptor& scf,
                                          const DomainSpec& spec,
                                          const ModeFlags& flags,
                                          std::uint64_t cap = 100'000'000);

// The 3m-voter construction over {a1,...,am}: for each k two voters rank
// a_k strictly last and are otherwise indifferent, and one voter ranks a_k
// second-to-last, a_{k+1} last (cyclically) and is otherwise indifferent.
Profile theorem1_profile(int m);

struct Theorem1Result {
  ManipulationWitness witness;
  int chosen_index;        // j: least index with a_j chosen at R
  int lifted_index;        // j-1 cyclically
  bool manipulation_at_truth;  // true: attack at R; false: at R'
  AltSet choice_r, choice_r1, choice_r2;
};

// Runs the tie-refinement attack against a Condorcet extension; throws
// InternalError if the lifted alternative fails to become Condorcet winner
// after both lifts, or the SCF breaks its Condorcet-extension contract.
Theorem1Result theorem1_attack(const ScfDescriptor& scf, int m);

// Converts a set-monotonicity failure of a pairwise SCF into a strong
// manipulation by an added voter n+1 who is indifferent everywhere except
// on the critical pair.
ManipulationWitness theorem3_attack(const ScfDescriptor& scf,
                                    const AxiomWitness& violation);

struct ParticipationWitness {
  Profile base;       // n voters
  Relation joiner;    // relation of the would-be voter n+1
  AltSet feasible;
  AltSet without_joiner;
  AltSet with_joiner;
};

struct ParticipationReport {
  bool pass = true;
  std::optional<ParticipationWitness> witness;
  std::uint64_t instances_checked = 0;
  std::uint64_t skipped = 0;
  bool exhaustive = false;
};

// Fails iff some joiner strictly Kelly-prefers the outcome obtained by
// abstaining. Base profiles range over sizes 1..spec.n.
ParticipationReport check_participation(const ScfDescriptor& scf,
                                        const DomainSpec& spec);

// The full-indifference misreport that realizes a participation failure of
// a pairwise SCF as a Kelly manipulation.
ManipulationWitness prop3_reduction(const ScfDescriptor& scf,
                                    const ParticipationWitness& witness);

}  // namespace choicelab
