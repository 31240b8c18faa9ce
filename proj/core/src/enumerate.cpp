#include "choicelab/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace choicelab {

std::uint64_t effective_cap(const DomainSpec& spec) {
  if (const char* env = std::getenv("CHOICELAB_CAP"))
    return std::strtoull(env, nullptr, 10);
  return spec.cap;
}

static std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) {
    if (out > UINT64_MAX / base) throw CapExceededError("domain size overflow");
    out *= base;
  }
  return out;
}

std::vector<Relation> enumerate_relations(int m, RelationMode mode) {
  if (m < 1 || m > kMaxAlts) throw ValidationError("m out of range");
  const int pairs = m * (m - 1) / 2;
  const std::uint64_t total = pow_u64(3, pairs);
  std::vector<Relation> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Relation r = Relation::from_code(m, code);
    if (mode == RelationMode::StrictLinear && !r.is_strict_order()) continue;
    if (mode == RelationMode::WeakOrder && !r.is_transitive()) continue;
    out.push_back(r);
  }
  return out;
}

std::uint64_t relation_count(int m, RelationMode mode) {
  return enumerate_relations(m, mode).size();
}

std::uint64_t profile_count(const DomainSpec& spec) {
  return pow_u64(relation_count(spec.m, spec.mode), spec.n);
}

void for_each_profile(const DomainSpec& spec,
                      const std::function<bool(const Profile&)>& fn) {
  const std::vector<Relation> rels = enumerate_relations(spec.m, spec.mode);
  Profile profile;
  profile.labels = default_labels(spec.m);
  profile.voters.assign(spec.n, rels[0]);

  if (spec.style == EnumStyle::Exhaustive) {
    if (profile_count(spec) > effective_cap(spec))
      throw CapExceededError(
          "exhaustive profile space exceeds cap; use sampled style");
    std::vector<std::size_t> idx(spec.n, 0);
    for (;;) {
      for (int i = 0; i < spec.n; ++i) profile.voters[i] = rels[idx[i]];
      if (!fn(profile)) return;
      int pos = spec.n - 1;
      while (pos >= 0 && ++idx[pos] == rels.size()) idx[pos--] = 0;
      if (pos < 0) return;
    }
  } else {
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::size_t> pick(0, rels.size() - 1);
    for (std::uint64_t s = 0; s < spec.samples; ++s) {
      for (int i = 0; i < spec.n; ++i) profile.voters[i] = rels[pick(rng)];
      if (!fn(profile)) return;
    }
  }
}

std::vector<MarginMatrix> enumerate_tournaments(int m) {
  if (m < 1 || m > kMaxAlts) throw ValidationError("m out of range");
  const int pairs = m * (m - 1) / 2;
  std::vector<MarginMatrix> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
    MarginMatrix t;
    t.m = m;
    t.voter_count = 1;
    t.scope = AltSet::full(m);
    t.g.assign(static_cast<std::size_t>(m) * m, 0);
    int bit = 0;
    for (Alt a = 0; a < m; ++a)
      for (Alt b = a + 1; b < m; ++b, ++bit) {
        const int v = (code >> bit) & 1 ? 1 : -1;
        t.at(a, b) = v;
        t.at(b, a) = -v;
      }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<AltSet> nonempty_subsets(AltSet universe) {
  std::vector<AltSet> out;
  const std::uint32_t u = universe.bits();
  for (std::uint32_t s = u; s; s = (s - 1) & u) out.push_back(AltSet(s));
  std::sort(out.begin(), out.end(), [](AltSet a, AltSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits() < b.bits();
  });
  return out;
}

}  // namespace choicelab
