#include "choicelab/axioms.hpp"

#include <map>

namespace choicelab {

namespace {

// Shared sweep driver: feeds every (profile, feasible set) of the domain to
// `body`, handling precondition-failing evaluations as skipped instances.
// `body` returns true to keep going, false once a witness is recorded.
struct Sweep {
  AxiomReport report;
  ScfEvaluator eval;

  Sweep(Axiom axiom, const ScfDescriptor& scf, const DomainSpec& spec)
      : eval(scf) {
    report.axiom = axiom;
    report.scf_key = scf.key;
    report.domain = spec;
    if (spec.style == EnumStyle::Exhaustive &&
        profile_count(spec) > effective_cap(spec))
      throw CapExceededError("axiom sweep domain exceeds cap");
  }

  template <typename Body>
  void run(const DomainSpec& spec, Body&& body) {
    const std::vector<AltSet> feasibles = nonempty_subsets(AltSet::full(spec.m));
    for_each_profile(spec, [&](const Profile& profile) {
      ++report.instances_checked;
      for (AltSet a_set : feasibles) {
        AltSet chosen;
        try {
          chosen = eval(profile, a_set);
        } catch (const PreconditionError&) {
          ++report.skipped;
          continue;
        }
        if (!body(profile, a_set, chosen)) {
          report.pass = false;
          return false;
        }
      }
      return true;
    });
    report.exhaustive = report.pass && spec.style == EnumStyle::Exhaustive;
  }

  // Evaluation of a modified profile inside a body; nullopt when the SCF's
  // preconditions fail there.
  std::optional<AltSet> try_eval(const Profile& profile, AltSet a_set) {
    try {
      return eval(profile, a_set);
    } catch (const PreconditionError&) {
      ++report.skipped;
      return std::nullopt;
    }
  }
};

AxiomWitness make_witness(AltSet a_set, const Profile& before, const Profile& after,
                          int voter, Alt x, Alt a, Alt b, AltSet chosen_before,
                          AltSet chosen_after) {
  AxiomWitness w;
  w.feasible = a_set;
  w.profile_before = before;
  w.profile_after = after;
  w.voter = voter;
  w.x = x;
  w.a = a;
  w.b = b;
  w.chosen_before = chosen_before;
  w.chosen_after = chosen_after;
  return w;
}

}  // namespace

std::string axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Monotonicity: return "mono";
    case Axiom::StrongMonotonicity: return "strongmono";
    case Axiom::SetMonotonicity: return "setmono";
    case Axiom::Ssp: return "ssp";
    case Axiom::Iua: return "iua";
    case Axiom::Pairwiseness: return "pairwise";
    case Axiom::CondorcetExtension: return "condorcet";
  }
  throw InternalError("bad axiom enum");
}

Axiom axiom_from_name(const std::string& name) {
  for (Axiom a : {Axiom::Monotonicity, Axiom::StrongMonotonicity,
                  Axiom::SetMonotonicity, Axiom::Ssp, Axiom::Iua,
                  Axiom::Pairwiseness, Axiom::CondorcetExtension})
    if (axiom_name(a) == name) return a;
  throw ValidationError("unknown axiom: " + name);
}

AxiomReport check_monotonicity(const ScfDescriptor& scf, const DomainSpec& spec) {
  Sweep sweep(Axiom::Monotonicity, scf, spec);
  sweep.run(spec, [&](const Profile& profile, AltSet a_set, AltSet chosen) {
    Profile modified = profile;
    for (int i = 0; i < profile.n(); ++i) {
      for (Alt a : chosen.each()) {
        for (Alt b : a_set.each()) {
          if (a == b) continue;
          for (const Relation& variant : weaken_variants(profile.voters[i], a, b)) {
            if (variant == profile.voters[i]) continue;
            modified.voters[i] = variant;
            const auto after = sweep.try_eval(modified, a_set);
            if (after && !after->contains(a)) {
              sweep.report.witness = make_witness(a_set, profile, modified, i, -1,
                                                  a, b, chosen, *after);
              return false;
            }
          }
        }
      }
      modified.voters[i] = profile.voters[i];
    }
    return true;
  });
  return sweep.report;
}

AxiomReport check_strong_monotonicity(const ScfDescriptor& scf, const DomainSpec& spec) {
  Sweep sweep(Axiom::StrongMonotonicity, scf, spec);
  sweep.run(spec, [&](const Profile& profile, AltSet a_set, AltSet chosen) {
    Profile modified = profile;
    for (int i = 0; i < profile.n(); ++i) {
      for (Alt a : a_set.each()) {
        for (Alt b : a_set.each()) {
          if (a == b) continue;
          for (const Relation& variant : weaken_variants(profile.voters[i], a, b)) {
            if (variant == profile.voters[i]) continue;
            modified.voters[i] = variant;
            const auto after = sweep.try_eval(modified, a_set);
            if (!after) continue;
            // x in f(R,A) with b != x must survive.
            const AltSet dropped = chosen.minus(*after).without(b);
            if (!dropped.empty()) {
              sweep.report.witness = make_witness(a_set, profile, modified, i,
                                                  dropped.lowest(), a, b, chosen,
                                                  *after);
              return false;
            }
          }
        }
      }
      modified.voters[i] = profile.voters[i];
    }
    return true;
  });
  return sweep.report;
}

AxiomReport check_set_monotonicity(const ScfDescriptor& scf, const DomainSpec& spec) {
  Sweep sweep(Axiom::SetMonotonicity, scf, spec);
  sweep.run(spec, [&](const Profile& profile, AltSet a_set, AltSet chosen) {
    Profile modified = profile;
    for (int i = 0; i < profile.n(); ++i) {
      for (Alt a : a_set.each()) {
        for (Alt b : a_set.minus(chosen).each()) {
          if (a == b) continue;
          for (const Relation& variant : weaken_variants(profile.voters[i], a, b)) {
            if (variant == profile.voters[i]) continue;
            modified.voters[i] = variant;
            const auto after = sweep.try_eval(modified, a_set);
            if (after && *after != chosen) {
              sweep.report.witness = make_witness(a_set, profile, modified, i, -1,
                                                  a, b, chosen, *after);
              return false;
            }
          }
        }
      }
      modified.voters[i] = profile.voters[i];
    }
    return true;
  });
  return sweep.report;
}

AxiomReport check_ssp(const ScfDescriptor& scf, const DomainSpec& spec) {
  Sweep sweep(Axiom::Ssp, scf, spec);
  sweep.run(spec, [&](const Profile& profile, AltSet a_set, AltSet chosen) {
    // B runs over sets between f(R,A) and A, including B = f(R,A).
    const std::uint32_t extra = a_set.minus(chosen).bits();
    for (std::uint32_t s = extra;; s = (s - 1) & extra) {
      const AltSet b_set = chosen | AltSet(s);
      if (b_set != a_set) {
        const auto sub = sweep.try_eval(profile, b_set);
        if (sub && *sub != chosen) {
          AxiomWitness w = make_witness(a_set, profile, profile, -1, -1, -1, -1,
                                        chosen, *sub);
          w.subset_b = b_set;
          sweep.report.witness = w;
          return false;
        }
      }
      if (s == 0) break;
    }
    return true;
  });
  return sweep.report;
}

namespace {

// R and R' agree on every pair {a,b} with a chosen and b feasible.
bool agree_on_chosen_pairs(const Profile& r1, const Profile& r2, AltSet chosen,
                           AltSet a_set) {
  for (int i = 0; i < r1.n(); ++i)
    for (Alt a : chosen.each())
      for (Alt b : a_set.each()) {
        if (a == b) continue;
        if (r1.voters[i].weak(a, b) != r2.voters[i].weak(a, b) ||
            r1.voters[i].weak(b, a) != r2.voters[i].weak(b, a))
          return false;
      }
  return true;
}

std::vector<Profile> materialize_profiles(const DomainSpec& spec) {
  std::vector<Profile> out;
  for_each_profile(spec, [&](const Profile& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace

AxiomReport check_iua(const ScfDescriptor& scf, const DomainSpec& spec) {
  Sweep sweep(Axiom::Iua, scf, spec);
  AxiomReport& report = sweep.report;
  const std::vector<Profile> profiles = materialize_profiles(spec);
  const std::vector<AltSet> feasibles = nonempty_subsets(AltSet::full(spec.m));
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(profiles.size()) * profiles.size();
  if (pairs > effective_cap(spec))
    throw CapExceededError("IUA sweep needs profile pairs beyond cap");

  for (AltSet a_set : feasibles) {
    std::vector<std::optional<AltSet>> chosen(profiles.size());
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      try {
        chosen[i] = sweep.eval(profiles[i], a_set);
      } catch (const PreconditionError&) {
        ++report.skipped;
      }
    }
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      if (!chosen[i]) continue;
      for (std::size_t j = 0; j < profiles.size(); ++j) {
        if (i == j || !chosen[j] || *chosen[j] == *chosen[i]) continue;
        if (agree_on_chosen_pairs(profiles[i], profiles[j], *chosen[i], a_set)) {
          report.pass = false;
          report.witness = make_witness(a_set, profiles[i], profiles[j], -1, -1,
                                        -1, -1, *chosen[i], *chosen[j]);
          report.instances_checked = pairs;
          return report;
        }
      }
    }
  }
  report.instances_checked = pairs;
  report.exhaustive = spec.style == EnumStyle::Exhaustive;
  return report;
}

AxiomReport check_pairwiseness(const ScfDescriptor& scf, const DomainSpec& spec) {
  Sweep sweep(Axiom::Pairwiseness, scf, spec);
  AxiomReport& report = sweep.report;
  const std::vector<AltSet> feasibles = nonempty_subsets(AltSet::full(spec.m));
  // margins-on-A key -> first profile seen and its choice set
  std::map<std::pair<std::uint32_t, std::vector<int>>, std::pair<Profile, AltSet>>
      seen;
  for_each_profile(spec, [&](const Profile& profile) {
    ++report.instances_checked;
    for (AltSet a_set : feasibles) {
      AltSet chosen;
      try {
        chosen = apply_scf(scf, profile, a_set);
      } catch (const PreconditionError&) {
        ++report.skipped;
        continue;
      }
      const MarginMatrix g = margin_matrix(profile, a_set);
      std::vector<int> key;
      for (Alt a : a_set.each())
        for (Alt b : a_set.each())
          if (a < b) key.push_back(g.at(a, b));
      auto [it, inserted] =
          seen.try_emplace({a_set.bits(), std::move(key)}, profile, chosen);
      if (!inserted && it->second.second != chosen) {
        report.pass = false;
        report.witness = make_witness(a_set, it->second.first, profile, -1, -1,
                                      -1, -1, it->second.second, chosen);
        return false;
      }
    }
    return true;
  });
  report.exhaustive = report.pass && spec.style == EnumStyle::Exhaustive;
  return report;
}

AxiomReport check_condorcet_extension(const ScfDescriptor& scf, const DomainSpec& spec) {
  Sweep sweep(Axiom::CondorcetExtension, scf, spec);
  sweep.run(spec, [&](const Profile& profile, AltSet a_set, AltSet chosen) {
    const auto winner = condorcet_winner(margin_matrix(profile, a_set), a_set);
    if (winner && chosen != AltSet::single(*winner)) {
      AxiomWitness w = make_witness(a_set, profile, profile, -1, -1, *winner, -1,
                                    chosen, AltSet::single(*winner));
      sweep.report.witness = w;
      return false;
    }
    return true;
  });
  return sweep.report;
}

AxiomReport check_axiom(Axiom axiom, const ScfDescriptor& scf, const DomainSpec& spec) {
  switch (axiom) {
    case Axiom::Monotonicity: return check_monotonicity(scf, spec);
    case Axiom::StrongMonotonicity: return check_strong_monotonicity(scf, spec);
    case Axiom::SetMonotonicity: return check_set_monotonicity(scf, spec);
    case Axiom::Ssp: return check_ssp(scf, spec);
    case Axiom::Iua: return check_iua(scf, spec);
    case Axiom::Pairwiseness: return check_pairwiseness(scf, spec);
    case Axiom::CondorcetExtension: return check_condorcet_extension(scf, spec);
  }
  throw InternalError("bad axiom enum");
}

bool replay_axiom_witness(Axiom axiom, const ScfDescriptor& scf,
                          const AxiomWitness& w) {
  const AltSet a_set = w.feasible;
  switch (axiom) {
    case Axiom::Monotonicity: {
      const AltSet before = apply_scf(scf, w.profile_before, a_set);
      const AltSet after = apply_scf(scf, w.profile_after, a_set);
      return before.contains(w.a) && !after.contains(w.a) &&
             before == w.chosen_before && after == w.chosen_after;
    }
    case Axiom::StrongMonotonicity: {
      const AltSet before = apply_scf(scf, w.profile_before, a_set);
      const AltSet after = apply_scf(scf, w.profile_after, a_set);
      return before.contains(w.x) && w.x != w.b && !after.contains(w.x);
    }
    case Axiom::SetMonotonicity: {
      const AltSet before = apply_scf(scf, w.profile_before, a_set);
      const AltSet after = apply_scf(scf, w.profile_after, a_set);
      return !before.contains(w.b) && before != after;
    }
    case Axiom::Ssp: {
      const AltSet full = apply_scf(scf, w.profile_before, a_set);
      const AltSet sub = apply_scf(scf, w.profile_before, w.subset_b);
      return full.subset_of(w.subset_b) && w.subset_b.subset_of(a_set) &&
             sub != full;
    }
    case Axiom::Iua: {
      const AltSet before = apply_scf(scf, w.profile_before, a_set);
      const AltSet after = apply_scf(scf, w.profile_after, a_set);
      return agree_on_chosen_pairs(w.profile_before, w.profile_after, before,
                                   a_set) &&
             before != after;
    }
    case Axiom::Pairwiseness: {
      const AltSet before = apply_scf(scf, w.profile_before, a_set);
      const AltSet after = apply_scf(scf, w.profile_after, a_set);
      return margin_matrix(w.profile_before, a_set)
                 .equal_on(margin_matrix(w.profile_after, a_set), a_set) &&
             before != after;
    }
    case Axiom::CondorcetExtension: {
      const AltSet chosen = apply_scf(scf, w.profile_before, a_set);
      const auto winner = condorcet_winner(
          margin_matrix(w.profile_before, a_set), a_set);
      return winner && chosen != AltSet::single(*winner);
    }
  }
  throw InternalError("bad axiom enum");
}

ImplicationReport verify_implications(const std::vector<const ScfDescriptor*>& scfs,
                                      const DomainSpec& spec) {
  ImplicationReport out;
  for (const ScfDescriptor* scf : scfs) {
    const AxiomReport mono = check_monotonicity(*scf, spec);
    const AxiomReport strong = check_strong_monotonicity(*scf, spec);
    const AxiomReport setmono = check_set_monotonicity(*scf, spec);
    const AxiomReport iua = check_iua(*scf, spec);
    if (strong.pass && iua.pass && !setmono.pass) {
      out.consistent = false;
      out.violations.push_back(scf->key +
                               ": strong monotonicity + IUA but not set-monotonicity");
    }
    if (setmono.pass && (!mono.pass || !iua.pass)) {
      out.consistent = false;
      out.violations.push_back(scf->key +
                               ": set-monotonicity without monotonicity + IUA");
    }
    out.reports.push_back(mono);
    out.reports.push_back(strong);
    out.reports.push_back(setmono);
    out.reports.push_back(iua);
  }
  return out;
}

std::optional<TournamentSspWitness> ssp_failure_on_tournaments(
    const ScfDescriptor& scf, int m) {
  const AltSet full = AltSet::full(m);
  for (const MarginMatrix& t : enumerate_tournaments(m)) {
    const AltSet chosen = scf.on_margins(t, full);
    const std::uint32_t extra = full.minus(chosen).bits();
    for (std::uint32_t s = extra;; s = (s - 1) & extra) {
      const AltSet b_set = chosen | AltSet(s);
      if (b_set != full) {
        const AltSet sub = scf.on_margins(t, b_set);
        if (sub != chosen)
          return TournamentSspWitness{t, b_set, chosen, sub};
      }
      if (s == 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace choicelab
