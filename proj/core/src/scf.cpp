#include "choicelab/scf.hpp"

#include "choicelab/game.hpp"
#include "choicelab/solutions.hpp"

namespace choicelab {

AltSet ScfDescriptor::on_margins(const MarginMatrix& margins, AltSet a_set) const {
  if (!pairwise || !margin_fn)
    throw PreconditionError(key + " is not a pairwise SCF");
  return margin_fn(margins, a_set);
}

const std::vector<ScfDescriptor>& scf_registry() {
  static const std::vector<ScfDescriptor> registry = [] {
    std::vector<ScfDescriptor> v;
    v.push_back({.key = "copeland",
                 .condorcet_extension = true,
                 .margin_fn = copeland_set});
    v.push_back({.key = "borda", .margin_fn = borda_set});
    v.push_back({.key = "plurality",
                 .pairwise = false,
                 .requires_strict_tops = true,
                 .profile_fn = plurality_set});
    v.push_back({.key = "topcycle",
                 .condorcet_extension = true,
                 .set_monotone = true,
                 .margin_fn = top_cycle});
    v.push_back({.key = "uncovered",
                 .requires_tournament = true,
                 .condorcet_extension = true,
                 .margin_fn = uncovered_set_general});
    v.push_back({.key = "mc",
                 .requires_tournament = true,
                 .condorcet_extension = true,
                 .set_monotone = true,
                 .margin_fn = minimal_covering_set_general});
    v.push_back({.key = "bp",
                 .condorcet_extension = true,
                 .set_monotone = true,
                 .margin_fn = bipartisan_set});
    return v;
  }();
  return registry;
}

const ScfDescriptor& find_scf(const std::string& key) {
  for (const ScfDescriptor& d : scf_registry())
    if (d.key == key) return d;
  throw ValidationError("unknown SCF key: " + key);
}

ScfDescriptor lex_tiebreak_wrapper(const ScfDescriptor& base) {
  ScfDescriptor out;
  out.key = base.key + "-lex";
  out.pairwise = base.pairwise;
  out.requires_strict_tops = base.requires_strict_tops;
  out.requires_tournament = base.requires_tournament;
  out.condorcet_extension = base.condorcet_extension;
  out.set_monotone = false;  // resolute wrappers lose set-monotonicity
  if (base.margin_fn) {
    auto fn = base.margin_fn;
    out.margin_fn = [fn](const MarginMatrix& g, AltSet a) {
      return AltSet::single(fn(g, a).lowest());
    };
  }
  if (base.profile_fn) {
    auto fn = base.profile_fn;
    out.profile_fn = [fn](const Profile& p, AltSet a) {
      return AltSet::single(fn(p, a).lowest());
    };
  }
  return out;
}

AltSet apply_scf(const ScfDescriptor& scf, const Profile& profile, AltSet a_set) {
  if (a_set.empty() || !a_set.subset_of(profile.universe()))
    throw ValidationError("feasible set must be a nonempty subset of the universe");
  AltSet result;
  if (scf.pairwise) {
    result = scf.on_margins(margin_matrix(profile, a_set), a_set);
  } else {
    result = scf.profile_fn(profile, a_set);
  }
  if (result.empty() || !result.subset_of(a_set))
    throw InternalError(scf.key + " returned an invalid choice set");
  return result;
}

AltSet ScfEvaluator::on_margins(const MarginMatrix& margins, AltSet a_set) {
  if (!scf_.pairwise) throw PreconditionError("margin evaluation of non-pairwise SCF");
  std::string key;
  key.reserve(8 + a_set.count() * a_set.count() * 2);
  const std::uint32_t bits = a_set.bits();
  key.append(reinterpret_cast<const char*>(&bits), sizeof(bits));
  for (Alt a : a_set.each())
    for (Alt b : a_set.each())
      if (a < b) {
        const std::int16_t v = static_cast<std::int16_t>(margins.at(a, b));
        key.append(reinterpret_cast<const char*>(&v), sizeof(v));
      }
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  AltSet result = scf_.margin_fn(margins, a_set);
  cache_.emplace(std::move(key), result);
  return result;
}

AltSet ScfEvaluator::operator()(const Profile& profile, AltSet a_set) {
  if (!scf_.pairwise) return apply_scf(scf_, profile, a_set);
  return on_margins(margin_matrix(profile, a_set), a_set);
}

}  // namespace choicelab
