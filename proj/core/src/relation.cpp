#include "choicelab/relation.hpp"

#include <algorithm>

namespace choicelab {

Relation::Relation(int m) : m_(m) {
  if (m < 1 || m > kMaxAlts)
    throw ValidationError("universe size out of range: " + std::to_string(m));
  for (Alt a = 0; a < m; ++a)
    rows_[a] = AltSet::full(m).bits();  // everything weakly related
}

Relation Relation::from_tiers(int m, const std::vector<std::vector<Alt>>& tiers) {
  std::vector<int> tier_of(m, -1);
  for (std::size_t t = 0; t < tiers.size(); ++t) {
    for (Alt a : tiers[t]) {
      if (a < 0 || a >= m) throw ValidationError("tier member out of range");
      if (tier_of[a] != -1) throw ValidationError("alternative appears in two tiers");
      tier_of[a] = static_cast<int>(t);
    }
  }
  for (Alt a = 0; a < m; ++a)
    if (tier_of[a] == -1) throw ValidationError("tiers do not cover the universe");
  Relation r(m);
  for (Alt a = 0; a < m; ++a)
    for (Alt b = 0; b < m; ++b)
      if (tier_of[a] > tier_of[b]) r.rows_[a] &= ~(1u << b);
  return r;
}

Verdict Relation::verdict(Alt a, Alt b) const {
  if (strict(a, b)) return Verdict::FirstBeatsSecond;
  if (strict(b, a)) return Verdict::SecondBeatsFirst;
  return Verdict::Tied;
}

void Relation::set_verdict(Alt a, Alt b, Verdict v) {
  rows_[a] |= 1u << b;
  rows_[b] |= 1u << a;
  if (v == Verdict::FirstBeatsSecond) rows_[b] &= ~(1u << a);
  if (v == Verdict::SecondBeatsFirst) rows_[a] &= ~(1u << b);
}

Relation Relation::from_code(int m, std::uint64_t code) {
  Relation r(m);
  for (Alt a = 0; a < m; ++a)
    for (Alt b = a + 1; b < m; ++b) {
      r.set_verdict(a, b, static_cast<Verdict>(code % 3));
      code /= 3;
    }
  if (code != 0) throw ValidationError("relation code out of range");
  return r;
}

std::uint64_t Relation::code() const {
  std::uint64_t c = 0, mult = 1;
  for (Alt a = 0; a < m_; ++a)
    for (Alt b = a + 1; b < m_; ++b) {
      c += mult * static_cast<std::uint64_t>(verdict(a, b));
      mult *= 3;
    }
  return c;
}

bool Relation::is_transitive() const {
  for (Alt a = 0; a < m_; ++a)
    for (Alt b = 0; b < m_; ++b) {
      if (!weak(a, b)) continue;
      // a R b: require row(a) superset of row(b)
      if (rows_[b] & ~rows_[a]) return false;
    }
  return true;
}

bool Relation::is_strict_order() const {
  if (!is_transitive()) return false;
  for (Alt a = 0; a < m_; ++a)
    for (Alt b = a + 1; b < m_; ++b)
      if (indifferent(a, b)) return false;
  return true;
}

bool Relation::has_unique_top(AltSet a_set) const {
  int tops = 0;
  for (Alt a : a_set.each()) {
    bool best = true;
    for (Alt b : a_set.each())
      if (b != a && !strict(a, b)) { best = false; break; }
    tops += best;
  }
  return tops == 1;
}

Alt Relation::top(AltSet a_set) const {
  for (Alt a : a_set.each()) {
    bool best = true;
    for (Alt b : a_set.each())
      if (b != a && !strict(a, b)) { best = false; break; }
    if (best) return a;
  }
  throw PreconditionError("voter has no unique most-preferred alternative");
}

bool Relation::indifference_preserved_in(const Relation& other) const {
  for (Alt a = 0; a < m_; ++a)
    for (Alt b = a + 1; b < m_; ++b)
      if (indifferent(a, b) && !other.indifferent(a, b)) return false;
  return true;
}

Relation Relation::restricted(AltSet a_set) const {
  const std::vector<Alt> mem = a_set.members();
  Relation r(static_cast<int>(mem.size()));
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      r.set_verdict(static_cast<Alt>(i), static_cast<Alt>(j), verdict(mem[i], mem[j]));
  return r;
}

std::vector<Relation> weaken_variants(const Relation& rel, Alt a, Alt b,
                                      bool require_transitive) {
  if (a == b) throw ValidationError("weaken_variants needs distinct alternatives");
  std::vector<Relation> out;
  out.push_back(rel);

  Relation add = rel;           // (a,b) joins the weak relation
  if (!add.weak(a, b)) {
    add.set_verdict(std::min(a, b), std::max(a, b), Verdict::Tied);
    if (!(add == rel)) out.push_back(add);
  }
  Relation force = rel;         // a strictly above b
  if (!force.strict(a, b)) {
    force.set_verdict(a, b, Verdict::FirstBeatsSecond);
    if (std::find(out.begin(), out.end(), force) == out.end()) out.push_back(force);
  }
  if (require_transitive)
    std::erase_if(out, [](const Relation& r) { return !r.is_transitive(); });
  return out;
}

bool kelly_weak(AltSet x, AltSet y, const Relation& rel) {
  for (Alt a : x.each())
    if (y.bits() & ~rel.weak_row(a)) return false;
  return true;
}

bool kelly_strict(AltSet x, AltSet y, const Relation& rel) {
  if (!kelly_weak(x, y, rel)) return false;
  for (Alt a : x.each())
    for (Alt b : y.each())
      if (rel.strict(a, b)) return true;
  return false;
}

}  // namespace choicelab
