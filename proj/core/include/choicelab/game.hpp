#pragma once

#include "choicelab/lp.hpp"
#include "choicelab/profile.hpp"

namespace choicelab {

// Mixed strategy of the symmetric zero-sum game whose payoffs are the
// majority margins over A. Probabilities are exact rationals indexed by the
// members of A in ascending order.
struct MixedStrategy {
  std::vector<Alt> alts;
  std::vector<Rational> p;

  Rational weight(Alt a) const;
};

// An optimal strategy: p >= 0, sum p = 1, p^T G >= 0 componentwise. The game
// value is 0 by skew-symmetry, so optimality is pure feasibility; the
// deterministic pivot rule makes the returned vertex reproducible.
MixedStrategy maximin_strategy(const MarginMatrix& margins, AltSet a_set);

// Exact certificate check, no tolerances.
bool is_optimal_strategy(const MixedStrategy& s, const MarginMatrix& margins,
                         AltSet a_set);

// Union of supports of all optimal strategies: a is chosen iff some optimal
// strategy plays it with positive probability (secondary LP maximizing p_a).
// On tournaments with an odd electorate this is the support of the unique
// equilibrium, i.e. the bipartisan set; in general it is the essential set.
AltSet bipartisan_set(const MarginMatrix& margins, AltSet a_set);

// Largest weight alternative `a` receives across optimal strategies.
Rational max_support_weight(const MarginMatrix& margins, AltSet a_set, Alt a);

}  // namespace choicelab
