#pragma once

#include <optional>
#include <string>

#include "choicelab/enumerate.hpp"
#include "choicelab/scf.hpp"

namespace choicelab {

enum class Axiom {
  Monotonicity,
  StrongMonotonicity,
  SetMonotonicity,
  Ssp,
  Iua,
  Pairwiseness,
  CondorcetExtension,
};

std::string axiom_name(Axiom axiom);
Axiom axiom_from_name(const std::string& name);  // mono, strongmono, setmono, ssp, iua, pairwise, condorcet

// A machine-checkable failure. profile_after differs from profile_before in
// voter `voter` only (single-voter axioms); SSP stores the subset B instead,
// IUA/pairwiseness a fully independent second profile.
struct AxiomWitness {
  AltSet feasible;
  Profile profile_before;
  Profile profile_after;
  int voter = -1;
  Alt x = -1;  // the dropped chosen alternative (monotonicity variants)
  Alt a = -1;
  Alt b = -1;
  AltSet subset_b;
  AltSet chosen_before;
  AltSet chosen_after;
};

struct AxiomReport {
  Axiom axiom;
  std::string scf_key;
  DomainSpec domain;
  bool pass = true;
  std::optional<AxiomWitness> witness;
  std::uint64_t instances_checked = 0;  // profiles (or profile pairs) scanned
  std::uint64_t skipped = 0;            // precondition-failing evaluations
  bool exhaustive = false;              // pass certified exhaustive for the domain
};

AxiomReport check_monotonicity(const ScfDescriptor& scf, const DomainSpec& spec);
AxiomReport check_strong_monotonicity(const ScfDescriptor& scf, const DomainSpec& spec);
AxiomReport check_set_monotonicity(const ScfDescriptor& scf, const DomainSpec& spec);
AxiomReport check_ssp(const ScfDescriptor& scf, const DomainSpec& spec);
AxiomReport check_iua(const ScfDescriptor& scf, const DomainSpec& spec);
AxiomReport check_pairwiseness(const ScfDescriptor& scf, const DomainSpec& spec);
AxiomReport check_condorcet_extension(const ScfDescriptor& scf, const DomainSpec& spec);

AxiomReport check_axiom(Axiom axiom, const ScfDescriptor& scf, const DomainSpec& spec);

// Re-evaluates the axiom predicate on the stored witness objects; true iff
// the violation reproduces.
bool replay_axiom_witness(Axiom axiom, const ScfDescriptor& scf,
                          const AxiomWitness& witness);

// Cross-checks the implication lattice on observed verdicts: strong
// monotonicity + IUA entail set-monotonicity, and set-monotonicity entails
// monotonicity and IUA. A contradiction is an implementation bug.
struct ImplicationReport {
  bool consistent = true;
  std::vector<std::string> violations;
  std::vector<AxiomReport> reports;
};

ImplicationReport verify_implications(const std::vector<const ScfDescriptor*>& scfs,
                                      const DomainSpec& spec);

// SSP sweep directly over all labeled tournaments on m alternatives
// (margin-level, for pairwise SCFs).
struct TournamentSspWitness {
  MarginMatrix tournament;
  AltSet subset_b;
  AltSet chosen_full;
  AltSet chosen_sub;
};
std::optional<TournamentSspWitness> ssp_failure_on_tournaments(
    const ScfDescriptor& scf, int m);

}  // namespace choicelab
