#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>

#include "choicelab/profile.hpp"

namespace choicelab {

// A registered social choice function. Pairwise SCFs are routed through the
// margin matrix of the restricted profile, so margin-equal profiles yield
// equal choice sets by construction.
struct ScfDescriptor {
  std::string key;
  bool pairwise = true;
  bool requires_strict_tops = false;   // plurality
  bool requires_tournament = false;    // documented precondition, not enforced here
  bool condorcet_extension = false;
  bool set_monotone = false;           // the paper-side classification under test

  std::function<AltSet(const MarginMatrix&, AltSet)> margin_fn;
  std::function<AltSet(const Profile&, AltSet)> profile_fn;

  AltSet on_margins(const MarginMatrix& margins, AltSet a_set) const;
};

// Fixed CLI vocabulary: copeland, borda, plurality, topcycle, uncovered,
// mc, bp.
const std::vector<ScfDescriptor>& scf_registry();
const ScfDescriptor& find_scf(const std::string& key);  // throws ValidationError

// Resolute wrapper choosing the lexicographically least member of the base
// SCF's choice set. A Condorcet extension when the base is one; used as the
// no-show-paradox exemplar.
ScfDescriptor lex_tiebreak_wrapper(const ScfDescriptor& base);

// Evaluates f(R, A): checks A, restricts, routes pairwise SCFs through the
// margin matrix. Result is guaranteed nonempty and within A.
AltSet apply_scf(const ScfDescriptor& scf, const Profile& profile, AltSet a_set);

// Memoizes pairwise evaluations by (feasible set, margins). Hot loops in the
// axiom and manipulation sweeps hit a small number of distinct margin
// matrices, so this is the main performance lever.
class ScfEvaluator {
public:
  explicit ScfEvaluator(const ScfDescriptor& scf) : scf_(scf) {}

  const ScfDescriptor& scf() const { return scf_; }
  AltSet operator()(const Profile& profile, AltSet a_set);
  AltSet on_margins(const MarginMatrix& margins, AltSet a_set);

private:
  const ScfDescriptor& scf_;
  std::unordered_map<std::string, AltSet> cache_;
};

}  // namespace choicelab
