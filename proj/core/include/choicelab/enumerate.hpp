#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "choicelab/profile.hpp"

namespace choicelab {

enum class EnumStyle { Exhaustive, Sampled };

// Bounded domain over which axiom and manipulation checks quantify.
struct DomainSpec {
  int n = 1;
  int m = 3;
  RelationMode mode = RelationMode::GeneralComplete;
  EnumStyle style = EnumStyle::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultEnumerationCap;

  static constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
};

// Reads CHOICELAB_CAP if set, otherwise the spec's own cap.
std::uint64_t effective_cap(const DomainSpec& spec);

// Deterministic, duplicate-free, in lexicographic order over pair verdicts
// (aPb < aIb < bPa). Strict-linear and weak-order modes filter the
// general-complete stream.
std::vector<Relation> enumerate_relations(int m, RelationMode mode);

std::uint64_t relation_count(int m, RelationMode mode);
std::uint64_t profile_count(const DomainSpec& spec);

// Streams profiles in deterministic order (Cartesian power of the relation
// enumeration; sampled style draws with the seeded generator). The Profile
// reference is reused between calls. Return false from the callback to stop.
void for_each_profile(const DomainSpec& spec,
                      const std::function<bool(const Profile&)>& fn);

// All labeled tournaments on m alternatives as +-1 margin matrices, ordered
// by the bit pattern over pairs (0,1),(0,2),...: bit set means the lower
// index beats the higher.
std::vector<MarginMatrix> enumerate_tournaments(int m);

// Nonempty subsets of `universe`, by increasing size, lexicographic within
// a size class.
std::vector<AltSet> nonempty_subsets(AltSet universe);

}  // namespace choicelab
