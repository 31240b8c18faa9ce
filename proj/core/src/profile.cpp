#include "choicelab/profile.hpp"

#include <set>

namespace choicelab {

void Profile::validate() const {
  if (labels.empty()) throw ValidationError("empty universe");
  if (m() > kMaxAlts) throw ValidationError("universe too large");
  if (voters.empty()) throw ValidationError("profile needs at least one voter");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != m())
    throw ValidationError("duplicate alternative label");
  for (const Relation& r : voters)
    if (r.size() != m())
      throw ValidationError("voter relation does not cover the universe");
}

Alt Profile::index_of(const std::string& label) const {
  for (int i = 0; i < m(); ++i)
    if (labels[i] == label) return i;
  throw ValidationError("unknown label: " + label);
}

std::vector<std::string> default_labels(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

Profile restrict(const Profile& profile, AltSet a_set) {
  if (!a_set.subset_of(profile.universe()) || a_set.empty())
    throw ValidationError("feasible set is not a nonempty subset of the universe");
  Profile out;
  for (Alt a : a_set.each()) out.labels.push_back(profile.labels[a]);
  out.voters.reserve(profile.voters.size());
  for (const Relation& r : profile.voters) out.voters.push_back(r.restricted(a_set));
  return out;
}

bool MarginMatrix::is_tournament_on(AltSet a_set) const {
  return !tied_pair_on(a_set).has_value();
}

std::optional<std::pair<Alt, Alt>> MarginMatrix::tied_pair_on(AltSet a_set) const {
  for (Alt a : a_set.each())
    for (Alt b : a_set.each())
      if (a < b && at(a, b) == 0) return std::make_pair(a, b);
  return std::nullopt;
}

MarginMatrix MarginMatrix::submatrix(AltSet a_set) const {
  const std::vector<Alt> mem = a_set.members();
  MarginMatrix out;
  out.m = static_cast<int>(mem.size());
  out.voter_count = voter_count;
  out.scope = AltSet::full(out.m);
  out.g.assign(static_cast<std::size_t>(out.m) * out.m, 0);
  for (int i = 0; i < out.m; ++i)
    for (int j = 0; j < out.m; ++j) out.at(i, j) = at(mem[i], mem[j]);
  return out;
}

bool MarginMatrix::equal_on(const MarginMatrix& other, AltSet a_set) const {
  for (Alt a : a_set.each())
    for (Alt b : a_set.each())
      if (at(a, b) != other.at(a, b)) return false;
  return true;
}

MarginMatrix margin_matrix(const Profile& profile, AltSet a_set) {
  MarginMatrix out;
  out.m = profile.m();
  out.voter_count = profile.n();
  out.scope = a_set;
  out.g.assign(static_cast<std::size_t>(out.m) * out.m, 0);
  for (Alt a : a_set.each())
    for (Alt b : a_set.each()) {
      if (a >= b) continue;
      int s = 0;
      for (const Relation& r : profile.voters) {
        if (r.strict(a, b)) ++s;
        else if (r.strict(b, a)) --s;
      }
      out.at(a, b) = s;
      out.at(b, a) = -s;
    }
  return out;
}

std::optional<Alt> condorcet_winner(const MarginMatrix& margins, AltSet a_set) {
  for (Alt a : a_set.each()) {
    bool wins = true;
    for (Alt b : a_set.each())
      if (b != a && margins.at(a, b) <= 0) { wins = false; break; }
    if (wins) return a;  // unique by skew-symmetry
  }
  return std::nullopt;
}

}  // namespace choicelab
