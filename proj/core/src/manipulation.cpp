#include "choicelab/manipulation.hpp"

#include <algorithm>
#include <numeric>

namespace choicelab {

namespace {

int pair_contrib(const Relation& r, Alt a, Alt b) {
  if (r.strict(a, b)) return 1;
  if (r.strict(b, a)) return -1;
  return 0;
}

void force_indifferent(Relation& rel, Alt a, Alt b) {
  if (a > b) std::swap(a, b);
  rel.set_verdict(a, b, Verdict::Tied);
}

bool group_prefers(AltSet after, AltSet before, const Profile& truth,
                   const std::vector<int>& group, const ModeFlags& flags) {
  for (int i : group) {
    const Relation& rel = truth.voters[static_cast<std::size_t>(i)];
    if (!kelly_weak(after, before, rel)) return false;
    if (flags.pref == PrefExtension::Strict && !kelly_strict(after, before, rel))
      return false;
  }
  return true;
}

// Depth-first over the group's joint misreports; member order fixed, the
// last member varies fastest. Margins are maintained incrementally for
// pairwise SCFs.
struct GroupSearch {
  const ScfDescriptor& scf;
  ScfEvaluator& eval;
  const Profile& truth;
  AltSet a_set;
  const ModeFlags& flags;
  const std::vector<Relation>& all_rels;
  std::uint64_t cap;
  std::uint64_t& candidates;
  std::uint64_t& skipped;

  AltSet before;
  Profile work;
  MarginMatrix gm;

  std::optional<ManipulationWitness> run(const std::vector<int>& group) {
    std::vector<std::vector<const Relation*>> cands;
    cands.reserve(group.size());
    for (int i : group) {
      const Relation& true_rel = truth.voters[static_cast<std::size_t>(i)];
      std::vector<const Relation*> list;
      for (const Relation& r : all_rels) {
        if (flags.misreport == MisreportClass::IndifferencePreserving &&
            !true_rel.indifference_preserved_in(r))
          continue;
        list.push_back(&r);
      }
      cands.push_back(std::move(list));
    }

    work = truth;
    if (scf.pairwise) gm = margin_matrix(truth, a_set);

    std::vector<std::size_t> idx(group.size(), 0);
    for (std::size_t k = 0; k < group.size(); ++k)
      set_member(group[k], *cands[k][0]);

    for (;;) {
      if (++candidates > cap)
        throw CapExceededError("manipulation search exceeded candidate cap");
      if (auto w = evaluate(group)) return w;

      std::size_t k = group.size();
      while (k > 0) {
        --k;
        if (++idx[k] < cands[k].size()) {
          set_member(group[k], *cands[k][idx[k]]);
          break;
        }
        idx[k] = 0;
        set_member(group[k], *cands[k][0]);
        if (k == 0) {
          restore(group);
          return std::nullopt;
        }
      }
    }
  }

  void set_member(int voter, const Relation& rel) {
    Relation& slot = work.voters[static_cast<std::size_t>(voter)];
    if (slot == rel) return;
    if (scf.pairwise) {
      for (Alt a : a_set.each())
        for (Alt b : a_set.each())
          if (a < b) {
            const int delta = pair_contrib(rel, a, b) - pair_contrib(slot, a, b);
            if (delta != 0) {
              gm.at(a, b) += delta;
              gm.at(b, a) -= delta;
            }
          }
    }
    slot = rel;
  }

  void restore(const std::vector<int>& group) {
    for (int i : group) set_member(i, truth.voters[static_cast<std::size_t>(i)]);
  }

  std::optional<ManipulationWitness> evaluate(const std::vector<int>& group) {
    AltSet after;
    try {
      after = scf.pairwise ? eval.on_margins(gm, a_set) : apply_scf(scf, work, a_set);
    } catch (const PreconditionError&) {
      ++skipped;
      return std::nullopt;
    }
    if (flags.require_outcome_change && after == before) return std::nullopt;
    if (!group_prefers(after, before, truth, group, flags)) return std::nullopt;
    ManipulationWitness w{.feasible = a_set,
                          .truth = truth,
                          .misreport = work,
                          .group = group,
                          .flags = flags,
                          .before = before,
                          .after = after};
    w.verified = true;
    return w;
  }
};

std::optional<ManipulationWitness> find_impl(
    const ScfDescriptor& scf, ScfEvaluator& eval, const Profile& profile,
    AltSet a_set, const ModeFlags& flags, const std::vector<Relation>& all_rels,
    std::uint64_t cap, std::uint64_t& candidates, std::uint64_t& skipped) {
  GroupSearch search{scf, eval, profile, a_set, flags, all_rels,
                     cap,  candidates, skipped};
  search.before = eval(profile, a_set);

  const int n = profile.n();
  const int max_size = std::min(flags.max_group_size, n);
  for (int size = 1; size <= max_size; ++size) {
    std::vector<int> group(static_cast<std::size_t>(size));
    std::iota(group.begin(), group.end(), 0);
    for (;;) {
      if (auto w = search.run(group)) return w;
      // next combination in lexicographic order
      int k = size - 1;
      while (k >= 0 && group[static_cast<std::size_t>(k)] == n - size + k) --k;
      if (k < 0) break;
      ++group[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < size; ++j)
        group[static_cast<std::size_t>(j)] = group[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

bool verify_manipulation(const ScfDescriptor& scf, ManipulationWitness& witness) {
  witness.verified = false;
  witness.truth.validate();
  witness.misreport.validate();
  const int n = witness.truth.n();
  if (witness.misreport.n() != n || witness.misreport.m() != witness.truth.m())
    throw ValidationError("truth and misreport profiles have mismatched shape");
  if (witness.feasible.empty() || !witness.feasible.subset_of(witness.truth.universe()))
    throw ValidationError("witness feasible set is invalid");
  if (witness.group.empty() ||
      !std::is_sorted(witness.group.begin(), witness.group.end()) ||
      std::adjacent_find(witness.group.begin(), witness.group.end()) !=
          witness.group.end() ||
      witness.group.front() < 0 || witness.group.back() >= n)
    throw ValidationError("witness group must be a sorted set of voter indices");

  for (int v = 0; v < n; ++v) {
    const bool in_group = std::binary_search(witness.group.begin(),
                                             witness.group.end(), v);
    const auto& tr = witness.truth.voters[static_cast<std::size_t>(v)];
    const auto& mr = witness.misreport.voters[static_cast<std::size_t>(v)];
    if (!in_group && !(tr == mr)) return false;
    if (in_group &&
        witness.flags.misreport == MisreportClass::IndifferencePreserving &&
        !tr.indifference_preserved_in(mr))
      return false;
  }

  const AltSet x = apply_scf(scf, witness.truth, witness.feasible);
  const AltSet y = apply_scf(scf, witness.misreport, witness.feasible);
  if (x != witness.before || y != witness.after) return false;
  if (witness.flags.require_outcome_change && x == y) return false;
  if (!group_prefers(y, x, witness.truth, witness.group, witness.flags))
    return false;
  witness.verified = true;
  return true;
}

std::optional<ManipulationWitness> find_manipulation(
    const ScfDescriptor& scf, const Profile& profile, AltSet a_set,
    const ModeFlags& flags, std::uint64_t cap) {
  profile.validate();
  ScfEvaluator eval(scf);
  const auto rels = enumerate_relations(profile.m(), RelationMode::GeneralComplete);
  std::uint64_t candidates = 0, skipped = 0;
  return find_impl(scf, eval, profile, a_set, flags, rels, cap, candidates,
                   skipped);
}

SweepReport check_group_strategyproofness(const ScfDescriptor& scf,
                                          const DomainSpec& spec,
                                          const ModeFlags& flags,
                                          std::uint64_t cap) {
  SweepReport rep;
  ScfEvaluator eval(scf);
  const auto rels = enumerate_relations(spec.m, RelationMode::GeneralComplete);
  const auto subsets = nonempty_subsets(AltSet::full(spec.m));
  for_each_profile(spec, [&](const Profile& p) {
    ++rep.profiles_checked;
    for (AltSet a_set : subsets) {
      try {
        auto w = find_impl(scf, eval, p, a_set, flags, rels, cap,
                           rep.candidates_evaluated, rep.skipped);
        if (w) {
          rep.pass = false;
          rep.witness = std::move(w);
          return false;
        }
      } catch (const PreconditionError&) {
        ++rep.skipped;
      }
    }
    return true;
  });
  rep.exhaustive = rep.pass && spec.style == EnumStyle::Exhaustive;
  return rep;
}

Profile theorem1_profile(int m) {
  if (m < 3 || m > kMaxAlts)
    throw ValidationError("tie-refinement construction needs 3 <= m <= " +
                          std::to_string(kMaxAlts));
  Profile p;
  p.labels = default_labels(m);
  auto others = [m](std::initializer_list<Alt> excluded) {
    std::vector<Alt> out;
    for (Alt x = 0; x < m; ++x)
      if (std::find(excluded.begin(), excluded.end(), x) == excluded.end())
        out.push_back(x);
    return out;
  };
  for (Alt k = 0; k < m; ++k) {
    const Relation r = Relation::from_tiers(m, {others({k}), {k}});
    p.voters.push_back(r);
    p.voters.push_back(r);
  }
  for (Alt k = 0; k < m; ++k) {
    const Alt next = (k + 1) % m;
    p.voters.push_back(Relation::from_tiers(m, {others({k, next}), {k}, {next}}));
  }
  // interleave so that the two clones of each "k last" voter sit at 2k, 2k+1
  std::vector<Relation> ordered;
  ordered.reserve(p.voters.size());
  for (Alt k = 0; k < m; ++k) {
    ordered.push_back(p.voters[static_cast<std::size_t>(2 * k)]);
    ordered.push_back(p.voters[static_cast<std::size_t>(2 * k + 1)]);
  }
  for (Alt k = 0; k < m; ++k)
    ordered.push_back(p.voters[static_cast<std::size_t>(2 * m + k)]);
  p.voters = std::move(ordered);
  return p;
}

Theorem1Result theorem1_attack(const ScfDescriptor& scf, int m) {
  if (!scf.condorcet_extension)
    throw PreconditionError(scf.key + " is not a Condorcet extension");
  const Profile r = theorem1_profile(m);
  const AltSet a_set = AltSet::full(m);

  const AltSet choice_r = apply_scf(scf, r, a_set);
  const int j = choice_r.lowest();
  const int jm = (j - 1 + m) % m;

  std::vector<Alt> middle;
  for (Alt x = 0; x < m; ++x)
    if (x != j && x != jm) middle.push_back(x);
  const Relation lift = Relation::from_tiers(m, {{jm}, middle, {j}});

  Profile r1 = r;
  r1.voters[static_cast<std::size_t>(2 * j)] = lift;
  Profile r2 = r1;
  r2.voters[static_cast<std::size_t>(2 * j + 1)] = lift;

  const AltSet choice_r1 = apply_scf(scf, r1, a_set);
  const AltSet choice_r2 = apply_scf(scf, r2, a_set);

  const auto cw = condorcet_winner(margin_matrix(r2, a_set), a_set);
  if (!cw || *cw != jm)
    throw InternalError("lifted alternative is not the Condorcet winner after both lifts");
  if (choice_r2 != AltSet::single(jm))
    throw InternalError(scf.key + " violated its Condorcet-extension contract");

  Theorem1Result result;
  result.chosen_index = j;
  result.lifted_index = jm;
  result.choice_r = choice_r;
  result.choice_r1 = choice_r1;
  result.choice_r2 = choice_r2;

  ManipulationWitness& w = result.witness;
  w.feasible = a_set;
  w.flags = ModeFlags{.pref = PrefExtension::Strict,
                      .misreport = MisreportClass::Unrestricted,
                      .require_outcome_change = true,
                      .max_group_size = 1};
  if (!choice_r1.contains(j)) {
    result.manipulation_at_truth = true;
    w.truth = r;
    w.misreport = r1;
    w.group = {2 * j};
    w.before = choice_r;
    w.after = choice_r1;
  } else {
    result.manipulation_at_truth = false;
    w.truth = r1;
    w.misreport = r2;
    w.group = {2 * j + 1};
    w.before = choice_r1;
    w.after = choice_r2;
  }
  if (!verify_manipulation(scf, w))
    throw InternalError("tie-refinement attack failed verification for " + scf.key);
  return result;
}

ManipulationWitness theorem3_attack(const ScfDescriptor& scf,
                                    const AxiomWitness& violation) {
  if (!scf.pairwise)
    throw PreconditionError("the added-voter reduction requires a pairwise SCF");
  const Profile& before = violation.profile_before;
  const Profile& after = violation.profile_after;
  const int n = before.n();
  const int m = before.m();
  const int i = violation.voter;
  const Alt a = violation.a;
  const Alt b = violation.b;
  if (i < 0 || i >= n || a < 0 || b < 0 || a >= m || b >= m || a == b)
    throw ValidationError("malformed set-monotonicity witness");
  if (after.n() != n || after.m() != m)
    throw ValidationError("witness profiles have mismatched shape");
  const Relation& ri = before.voters[static_cast<std::size_t>(i)];
  const Relation& ri2 = after.voters[static_cast<std::size_t>(i)];
  if (violation.chosen_before.contains(b))
    throw ValidationError("weakened alternative must be unchosen before the change");

  // shared first n voters: voter i with the critical pair merged to a tie
  std::vector<Relation> base = before.voters;
  force_indifferent(base[static_cast<std::size_t>(i)], a, b);
  {
    Relation check = ri2;
    force_indifferent(check, a, b);
    if (!(check == base[static_cast<std::size_t>(i)]))
      throw ValidationError("witness profiles differ beyond the critical pair");
  }

  auto joiner_like = [m, a, b](const Relation& source) {
    Relation r = Relation::full_indifference(m);
    const Alt lo = std::min(a, b), hi = std::max(a, b);
    r.set_verdict(lo, hi, source.verdict(lo, hi));
    return r;
  };

  Profile s{before.labels, base};
  s.voters.push_back(joiner_like(ri));
  Profile s2{before.labels, base};
  s2.voters.push_back(joiner_like(ri2));

  const AltSet universe = before.universe();
  if (!margin_matrix(s, universe).equal_on(margin_matrix(before, universe), universe) ||
      !margin_matrix(s2, universe).equal_on(margin_matrix(after, universe), universe))
    throw InternalError("margin transfer failed in the added-voter reduction");

  const AltSet x = apply_scf(scf, before, violation.feasible);
  const AltSet y = apply_scf(scf, after, violation.feasible);
  if (x != violation.chosen_before || y != violation.chosen_after || x == y)
    throw ValidationError("set-monotonicity witness does not replay");

  ManipulationWitness w;
  w.feasible = violation.feasible;
  w.group = {n};
  w.flags = ModeFlags{.pref = PrefExtension::Weak,
                      .misreport = MisreportClass::IndifferencePreserving,
                      .require_outcome_change = true,
                      .max_group_size = 1};
  if (ri.strict(b, a)) {
    w.truth = s;
    w.misreport = s2;
    w.before = x;
    w.after = y;
  } else if (ri.indifferent(a, b)) {
    w.truth = s2;
    w.misreport = s;
    w.before = y;
    w.after = x;
  } else {
    throw ValidationError("witness does not weaken b against a");
  }
  if (!verify_manipulation(scf, w))
    throw InternalError("added-voter reduction failed verification for " + scf.key);
  return w;
}

ParticipationReport check_participation(const ScfDescriptor& scf,
                                        const DomainSpec& spec) {
  ParticipationReport rep;
  ScfEvaluator eval(scf);
  const auto rels = enumerate_relations(spec.m, spec.mode);
  const auto subsets = nonempty_subsets(AltSet::full(spec.m));
  const std::uint64_t cap = effective_cap(spec);
  for (int bn = 1; bn <= spec.n && rep.pass; ++bn) {
    DomainSpec base_spec = spec;
    base_spec.n = bn;
    for_each_profile(base_spec, [&](const Profile& p) {
      Profile with = p;
      with.voters.emplace_back();
      for (const Relation& joiner : rels) {
        if (++rep.instances_checked > cap)
          throw CapExceededError("participation sweep exceeded the enumeration cap");
        with.voters.back() = joiner;
        for (AltSet a_set : subsets) {
          try {
            const AltSet x = eval(p, a_set);
            const AltSet y = eval(with, a_set);
            if (kelly_strict(x, y, joiner)) {
              rep.pass = false;
              rep.witness = ParticipationWitness{.base = p,
                                                 .joiner = joiner,
                                                 .feasible = a_set,
                                                 .without_joiner = x,
                                                 .with_joiner = y};
              return false;
            }
          } catch (const PreconditionError&) {
            ++rep.skipped;
          }
        }
      }
      return true;
    });
  }
  rep.exhaustive = rep.pass && spec.style == EnumStyle::Exhaustive;
  return rep;
}

ManipulationWitness prop3_reduction(const ScfDescriptor& scf,
                                    const ParticipationWitness& witness) {
  if (!scf.pairwise)
    throw PreconditionError("the abstention reduction requires a pairwise SCF");
  const int n = witness.base.n();
  Profile truth = witness.base;
  truth.voters.push_back(witness.joiner);
  // full indifference contributes nothing to any margin, so the misreport
  // reproduces the joiner-free outcome
  Profile misreport = witness.base;
  misreport.voters.push_back(Relation::full_indifference(witness.base.m()));

  ManipulationWitness w{.feasible = witness.feasible,
                        .truth = std::move(truth),
                        .misreport = std::move(misreport),
                        .group = {n},
                        .flags = ModeFlags{.pref = PrefExtension::Strict,
                                           .misreport = MisreportClass::IndifferencePreserving,
                                           .require_outcome_change = true,
                                           .max_group_size = 1},
                        .before = witness.with_joiner,
                        .after = witness.without_joiner};
  if (!verify_manipulation(scf, w))
    throw InternalError("abstention reduction failed verification for " + scf.key);
  return w;
}

}  // namespace choicelab
