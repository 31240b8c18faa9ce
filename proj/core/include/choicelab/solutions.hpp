#pragma once

#include "choicelab/profile.hpp"

namespace choicelab {

// Alternatives maximizing wins minus losses within A.
AltSet copeland_set(const MarginMatrix& margins, AltSet a_set);

// Argmax of margin row sums (the pairwise formulation of Borda scoring).
AltSet borda_set(const MarginMatrix& margins, AltSet a_set);

// Argmax of first-place counts in A. Every voter needs a unique strict top
// within A; otherwise a PreconditionError names the offending voter.
AltSet plurality_set(const Profile& profile, AltSet a_set);

// Maximal elements of the transitive closure of the weak majority relation
// (g >= 0) on A: the top strongly connected component.
AltSet top_cycle(const MarginMatrix& margins, AltSet a_set);

// Gillies covering within S: x beats y and beats everything in S that y
// beats. Requires tournament margins on S.
bool covers(const MarginMatrix& margins, AltSet s, Alt x, Alt y);

// Sign-based generalization of covering to margins with ties: x beats y and
// sign(g(x,z)) >= sign(g(y,z)) for every z in S. Coincides with Gillies
// covering on tournaments.
bool covers_general(const MarginMatrix& margins, AltSet s, Alt x, Alt y);

AltSet uncovered_set(const MarginMatrix& margins, AltSet a_set);          // tournament-only
AltSet uncovered_set_general(const MarginMatrix& margins, AltSet a_set);  // total

// B is a covering set for A: every outside alternative is covered within
// B plus itself.
bool is_covering_set(const MarginMatrix& margins, AltSet b_set, AltSet a_set);
bool is_covering_set_general(const MarginMatrix& margins, AltSet b_set, AltSet a_set);

// The unique inclusion-minimal covering set. Reference route: subsets by
// increasing size in deterministic order, first hit wins; uniqueness at the
// minimal size is asserted. The tournament-only entry point enforces the
// no-ties precondition; the general one uses sign-based covering.
AltSet minimal_covering_set(const MarginMatrix& margins, AltSet a_set);
AltSet minimal_covering_set_general(const MarginMatrix& margins, AltSet a_set);

}  // namespace choicelab
