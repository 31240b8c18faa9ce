#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "choicelab/types.hpp"

namespace choicelab {

enum class RelationMode { StrictLinear, WeakOrder, GeneralComplete };

// Verdict on the canonical pair (a, b) with a < b. Ordering matters: it is
// the enumeration order of relations.
enum class Verdict : std::uint8_t { FirstBeatsSecond = 0, Tied = 1, SecondBeatsFirst = 2 };

// One voter's complete binary relation over m alternatives. Completeness is
// maintained by construction: every pair carries exactly one verdict and the
// diagonal is reflexive. Transitivity is not required (general-complete mode).
class Relation {
public:
  Relation() = default;
  explicit Relation(int m);  // full indifference

  static Relation full_indifference(int m) { return Relation(m); }
  // tiers: best first; ties within a tier. Throws ValidationError unless the
  // tiers partition 0..m-1.
  static Relation from_tiers(int m, const std::vector<std::vector<Alt>>& tiers);
  static Relation from_code(int m, std::uint64_t code);

  int size() const { return m_; }

  // a R b (weak preference)
  bool weak(Alt a, Alt b) const { return (rows_[a] >> b) & 1u; }
  bool strict(Alt a, Alt b) const { return weak(a, b) && !weak(b, a); }
  bool indifferent(Alt a, Alt b) const { return weak(a, b) && weak(b, a); }
  std::uint32_t weak_row(Alt a) const { return rows_[a]; }

  Verdict verdict(Alt a, Alt b) const;  // a < b assumed canonical order
  void set_verdict(Alt a, Alt b, Verdict v);

  // Base-3 encoding over pairs (0,1),(0,2),...,(1,2),... in verdict order.
  std::uint64_t code() const;

  bool is_transitive() const;
  bool is_strict_order() const;  // antisymmetric and transitive
  // True iff every alternative of A has a unique best element... the voter
  // has a single strict top within A.
  bool has_unique_top(AltSet a_set) const;
  Alt top(AltSet a_set) const;  // requires has_unique_top

  // All true indifferences preserved: I(this) subseteq I(other).
  bool indifference_preserved_in(const Relation& other) const;

  Relation restricted(AltSet a_set) const;  // reindexed to 0..|A|-1

  bool operator==(const Relation& o) const {
    return m_ == o.m_ && rows_ == o.rows_;
  }

private:
  int m_ = 0;
  std::array<std::uint32_t, kMaxAlts> rows_{};  // rows_[a] bit b: a R b
};

// The set R_i^{(a,b)}: relation unchanged; (a,b) added to the weak relation;
// (b,a) dropped and (a,b) added. Duplicates collapsed, order fixed.
// With require_transitive, variants breaking transitivity are filtered out.
std::vector<Relation> weaken_variants(const Relation& rel, Alt a, Alt b,
                                      bool require_transitive = false);

// Kelly set extension: X weakly preferred to Y iff x R y for all x in X,
// y in Y. Strict additionally needs one strict pair.
bool kelly_weak(AltSet x, AltSet y, const Relation& rel);
bool kelly_strict(AltSet x, AltSet y, const Relation& rel);

}  // namespace choicelab
