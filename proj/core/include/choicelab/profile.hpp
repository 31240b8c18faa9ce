#pragma once

#include <optional>
#include <string>
#include <vector>

#include "choicelab/relation.hpp"
#include "choicelab/types.hpp"

namespace choicelab {

// Ordered list of voters over a shared universe of labeled alternatives.
struct Profile {
  std::vector<std::string> labels;   // size m, unique
  std::vector<Relation> voters;      // each over the same m

  int m() const { return static_cast<int>(labels.size()); }
  int n() const { return static_cast<int>(voters.size()); }
  AltSet universe() const { return AltSet::full(m()); }

  void validate() const;  // throws ValidationError
  Alt index_of(const std::string& label) const;  // throws on unknown label
};

// "a".."i" for small m, "a1".."am" otherwise callers pick their own.
std::vector<std::string> default_labels(int m);

// Voter order preserved; universe reindexed to the members of A.
Profile restrict(const Profile& profile, AltSet a_set);

// Skew-symmetric matrix of pairwise strict-support differences. Entries are
// populated for pairs within `scope`; the matrix is indexed by universe ids.
struct MarginMatrix {
  int m = 0;
  int voter_count = 0;
  AltSet scope;
  std::vector<int> g;  // m*m, row-major

  int at(Alt a, Alt b) const { return g[static_cast<std::size_t>(a) * m + b]; }
  int& at(Alt a, Alt b) { return g[static_cast<std::size_t>(a) * m + b]; }
  bool odd_electorate() const { return voter_count % 2 == 1; }

  // No zero off-diagonal margin within A.
  bool is_tournament_on(AltSet a_set) const;
  std::optional<std::pair<Alt, Alt>> tied_pair_on(AltSet a_set) const;

  // Margins over the members of A, reindexed to 0..|A|-1.
  MarginMatrix submatrix(AltSet a_set) const;

  bool equal_on(const MarginMatrix& other, AltSet a_set) const;
};

MarginMatrix margin_matrix(const Profile& profile, AltSet a_set);

// The alternative beating every other in A by strict majority, if any.
std::optional<Alt> condorcet_winner(const MarginMatrix& margins, AltSet a_set);

}  // namespace choicelab
