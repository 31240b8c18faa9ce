#include "choicelab/solutions.hpp"

#include <algorithm>
#include <string>

#include "choicelab/enumerate.hpp"

namespace choicelab {

namespace {

void require_tournament(const MarginMatrix& margins, AltSet scope) {
  if (auto tie = margins.tied_pair_on(scope))
    throw PreconditionError("tied majority margin between alternatives " +
                            std::to_string(tie->first) + " and " +
                            std::to_string(tie->second));
}

int sgn(int v) { return (v > 0) - (v < 0); }

AltSet argmax_set(const MarginMatrix& margins, AltSet a_set,
                  int (*score)(const MarginMatrix&, AltSet, Alt)) {
  int best = 0;
  bool first = true;
  for (Alt a : a_set.each()) {
    const int s = score(margins, a_set, a);
    if (first || s > best) { best = s; first = false; }
  }
  AltSet out;
  for (Alt a : a_set.each())
    if (score(margins, a_set, a) == best) out = out.with(a);
  return out;
}

}  // namespace

AltSet copeland_set(const MarginMatrix& margins, AltSet a_set) {
  return argmax_set(margins, a_set, [](const MarginMatrix& g, AltSet as, Alt a) {
    int s = 0;
    for (Alt b : as.each())
      if (b != a) s += sgn(g.at(a, b));
    return s;
  });
}

AltSet borda_set(const MarginMatrix& margins, AltSet a_set) {
  return argmax_set(margins, a_set, [](const MarginMatrix& g, AltSet as, Alt a) {
    int s = 0;
    for (Alt b : as.each())
      if (b != a) s += g.at(a, b);
    return s;
  });
}

AltSet plurality_set(const Profile& profile, AltSet a_set) {
  std::vector<int> firsts(profile.m(), 0);
  for (int i = 0; i < profile.n(); ++i) {
    const Relation& r = profile.voters[i];
    if (!r.has_unique_top(a_set))
      throw PreconditionError("voter " + std::to_string(i + 1) +
                              " has no unique most-preferred alternative");
    ++firsts[r.top(a_set)];
  }
  int best = -1;
  for (Alt a : a_set.each()) best = std::max(best, firsts[a]);
  AltSet out;
  for (Alt a : a_set.each())
    if (firsts[a] == best) out = out.with(a);
  return out;
}

AltSet top_cycle(const MarginMatrix& margins, AltSet a_set) {
  // reach[a]: alternatives reachable from a via weak-majority edges
  std::vector<std::uint32_t> reach(static_cast<std::size_t>(margins.m), 0);
  for (Alt a : a_set.each()) {
    reach[a] = AltSet::single(a).bits();
    for (Alt b : a_set.each())
      if (b != a && margins.at(a, b) >= 0) reach[a] |= AltSet::single(b).bits();
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (Alt a : a_set.each())
      for (Alt b : AltSet(reach[a]).each())
        if (reach[b] & ~reach[a]) {
          reach[a] |= reach[b];
          changed = true;
        }
  }
  AltSet out;
  for (Alt a : a_set.each())
    if ((a_set.bits() & ~reach[a]) == 0) out = out.with(a);
  return out;
}

bool covers_general(const MarginMatrix& margins, AltSet s, Alt x, Alt y) {
  if (margins.at(x, y) <= 0) return false;
  for (Alt z : s.each())
    if (z != x && z != y && sgn(margins.at(x, z)) < sgn(margins.at(y, z)))
      return false;
  return true;
}

bool covers(const MarginMatrix& margins, AltSet s, Alt x, Alt y) {
  require_tournament(margins, s);
  return covers_general(margins, s, x, y);
}

AltSet uncovered_set_general(const MarginMatrix& margins, AltSet a_set) {
  AltSet out;
  for (Alt x : a_set.each()) {
    bool covered = false;
    for (Alt y : a_set.each())
      if (y != x && covers_general(margins, a_set, y, x)) { covered = true; break; }
    if (!covered) out = out.with(x);
  }
  return out;
}

AltSet uncovered_set(const MarginMatrix& margins, AltSet a_set) {
  require_tournament(margins, a_set);
  return uncovered_set_general(margins, a_set);
}

bool is_covering_set_general(const MarginMatrix& margins, AltSet b_set, AltSet a_set) {
  for (Alt x : a_set.minus(b_set).each()) {
    const AltSet local = b_set.with(x);
    bool covered = false;
    for (Alt b : b_set.each())
      if (covers_general(margins, local, b, x)) { covered = true; break; }
    if (!covered) return false;
  }
  return true;
}

bool is_covering_set(const MarginMatrix& margins, AltSet b_set, AltSet a_set) {
  require_tournament(margins, a_set);
  if (b_set.empty() || !b_set.subset_of(a_set))
    throw ValidationError("covering-set candidate must be a nonempty subset");
  return is_covering_set_general(margins, b_set, a_set);
}

AltSet minimal_covering_set_general(const MarginMatrix& margins, AltSet a_set) {
  const std::vector<AltSet> candidates = nonempty_subsets(a_set);
  for (std::size_t i = 0; i < candidates.size();) {
    const int size = candidates[i].count();
    AltSet found;
    bool have = false;
    std::size_t j = i;
    for (; j < candidates.size() && candidates[j].count() == size; ++j) {
      if (is_covering_set_general(margins, candidates[j], a_set)) {
        if (have)
          throw InternalError("two minimal covering sets of equal size");
        found = candidates[j];
        have = true;
      }
    }
    if (have) return found;
    i = j;
  }
  throw InternalError("no covering set found");
}

AltSet minimal_covering_set(const MarginMatrix& margins, AltSet a_set) {
  require_tournament(margins, a_set);
  return minimal_covering_set_general(margins, a_set);
}

}  // namespace choicelab
