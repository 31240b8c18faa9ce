#pragma once

#include <string>
#include <vector>

#include <choicelab/io.hpp>

namespace choicelab::recipes {

// One reproducible text artifact; `name` is its golden-file name.
struct Artifact {
  std::string name;
  std::string content;
};

// Resolves registry keys plus the `<base>-lex` resolute wrappers.
ScfDescriptor resolve_scf(const std::string& key);

// Tie-refinement attack against each Condorcet extension for each m:
// witness block plus branch bookkeeping and the Condorcet-winner assertion.
std::vector<Artifact> thm1(const std::vector<std::string>& scf_keys,
                           const std::vector<int>& ms);
inline std::vector<Artifact> thm1_default() {
  return thm1({"copeland", "topcycle", "uncovered", "mc", "bp"}, {3, 4, 5});
}

// Exhaustive absence of strong group manipulations for the set-monotone
// SCFs on the two desk-scale domains (strict n=3 and weak-order n=2, m=3).
std::vector<Artifact> thm2(const std::vector<std::string>& scf_keys);
inline std::vector<Artifact> thm2_default() {
  return thm2({"mc", "bp", "topcycle"});
}

// First set-monotonicity failure on the strict n=2, m=3 domain converted
// into a verified added-voter manipulation.
std::vector<Artifact> thm3(const std::vector<std::string>& scf_keys);
inline std::vector<Artifact> thm3_default() {
  return thm3({"copeland", "borda"});
}

// Participation: exhaustive passes for mc/bp/topcycle, the indifferent-voter
// invariance of every pairwise SCF, and the no-show paradox of the
// lexicographic top-cycle wrapper with its abstention-reduction witness.
std::vector<Artifact> prop3();

// Minimal covering sets of all labeled tournaments, one table per m.
std::vector<Artifact> mctable(const std::vector<int>& ms);
inline std::vector<Artifact> mctable_default() { return mctable({3, 4, 5}); }

}  // namespace choicelab::recipes
