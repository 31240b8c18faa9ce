#include "choicelab/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace choicelab::io {

namespace {

struct Line {
  std::string text;  // comment-stripped, right-trimmed
  int number;        // 1-based position in the input
};

std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back())))
      raw.pop_back();
    std::size_t start = 0;
    while (start < raw.size() && std::isspace(static_cast<unsigned char>(raw[start])))
      ++start;
    if (start == raw.size()) continue;
    // keep the leading whitespace so columns refer to the original line
    out.push_back({raw, number});
  }
  return out;
}

std::vector<std::pair<std::string, int>> split_words(const std::string& s) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    const std::size_t begin = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.emplace_back(s.substr(begin, i - begin), static_cast<int>(begin) + 1);
  }
  return out;
}

Alt resolve_label(const std::string& token, const Profile& profile,
                  int line, int column) {
  for (std::size_t i = 0; i < profile.labels.size(); ++i)
    if (profile.labels[i] == token) return static_cast<Alt>(i);
  throw ParseError("unknown label '" + token + "'", line, column);
}

// `a>b`, `a=b`: one verdict token of the per-pair relation form.
void apply_pair_token(Relation& rel, std::vector<bool>& seen,
                      const std::string& token, int token_col,
                      const Profile& profile, int line) {
  std::size_t sep = token.find_first_of(">=");
  if (sep == std::string::npos || sep == 0 || sep + 1 >= token.size())
    throw ParseError("expected 'x>y' or 'x=y', got '" + token + "'", line, token_col);
  const Alt first = resolve_label(token.substr(0, sep), profile, line, token_col);
  const Alt second = resolve_label(token.substr(sep + 1), profile, line,
                                   token_col + static_cast<int>(sep) + 1);
  if (first == second)
    throw ParseError("pair relates '" + token.substr(0, sep) + "' to itself",
                     line, token_col);
  const Alt lo = std::min(first, second);
  const Alt hi = std::max(first, second);
  const int m = profile.m();
  const int pair_index = lo * m - lo * (lo + 1) / 2 + (hi - lo - 1);
  if (seen[static_cast<std::size_t>(pair_index)])
    throw ParseError("duplicate verdict for pair '" + token + "'", line, token_col);
  seen[static_cast<std::size_t>(pair_index)] = true;
  Verdict v;
  if (token[sep] == '=')
    v = Verdict::Tied;
  else if (first == lo)
    v = Verdict::FirstBeatsSecond;
  else
    v = Verdict::SecondBeatsFirst;
  rel.set_verdict(lo, hi, v);
}

Relation parse_pair_form(const std::string& body, std::size_t offset,
                         const Profile& profile, int line) {
  const int m = profile.m();
  Relation rel = Relation::full_indifference(m);
  std::vector<bool> seen(static_cast<std::size_t>(m * (m - 1) / 2), false);
  for (const auto& [token, col] : split_words(body.substr(offset)))
    apply_pair_token(rel, seen, token, static_cast<int>(offset) + col, profile, line);
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw ParseError("relation form '*' must state every pair exactly once",
                       line, 1);
  return rel;
}

Relation parse_tier_form(const std::string& body, std::size_t offset,
                         const Profile& profile, int line) {
  std::vector<std::vector<Alt>> tiers;
  std::vector<Alt> tier;
  std::size_t token_begin = offset;
  auto flush_label = [&](std::size_t end) {
    std::size_t begin = token_begin;
    while (begin < end && std::isspace(static_cast<unsigned char>(body[begin])))
      ++begin;
    std::size_t stop = end;
    while (stop > begin && std::isspace(static_cast<unsigned char>(body[stop - 1])))
      --stop;
    if (begin == stop)
      throw ParseError("empty label in ranking", line, static_cast<int>(begin) + 1);
    tier.push_back(resolve_label(body.substr(begin, stop - begin), profile, line,
                                 static_cast<int>(begin) + 1));
  };
  for (std::size_t i = offset; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == '>') {
      flush_label(i);
      token_begin = i + 1;
      tiers.push_back(std::move(tier));
      tier.clear();
    } else if (body[i] == '=') {
      flush_label(i);
      token_begin = i + 1;
    }
  }
  try {
    return Relation::from_tiers(profile.m(), tiers);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), line, static_cast<int>(offset) + 1);
  }
}

std::string hex64(std::uint64_t v) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

std::string with_checksum(std::string body) {
  body += "checksum: " + hex64(fnv1a64(body)) + "\n";
  return body;
}

Profile parse_profile(const std::string& text) {
  const std::vector<Line> lines = logical_lines(text);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const Line& {
    if (at >= lines.size())
      throw ParseError(std::string("unexpected end of input, expected ") + what,
                       lines.empty() ? 1 : lines.back().number + 1, 1);
    return lines[at];
  };

  const Line& header = need("header 'm n'");
  int m = 0, n = 0;
  {
    std::istringstream hs(header.text);
    std::string extra;
    if (!(hs >> m >> n) || (hs >> extra))
      throw ParseError("header must be 'm n'", header.number, 1);
    if (m < 1 || m > kMaxAlts)
      throw ParseError("alternative count must be between 1 and " +
                           std::to_string(kMaxAlts),
                       header.number, 1);
    if (n < 0) throw ParseError("voter count must be nonnegative", header.number, 1);
  }
  ++at;

  Profile profile;
  bool explicit_labels = false;
  if (at < lines.size()) {
    const auto words = split_words(lines[at].text);
    if (!words.empty() && words[0].first == "labels:") {
      explicit_labels = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        const auto& [token, col] = words[i];
        if (token.find_first_of(">=*:#") != std::string::npos)
          throw ParseError("label '" + token + "' contains a reserved character",
                           lines[at].number, col);
        if (std::find(profile.labels.begin(), profile.labels.end(), token) !=
            profile.labels.end())
          throw ParseError("duplicate label '" + token + "'", lines[at].number, col);
        profile.labels.push_back(token);
      }
      if (static_cast<int>(profile.labels.size()) != m)
        throw ParseError("expected " + std::to_string(m) + " labels, got " +
                             std::to_string(profile.labels.size()),
                         lines[at].number, 1);
      ++at;
    }
  }
  if (!explicit_labels) profile.labels = default_labels(m);

  while (profile.n() < n) {
    const Line& line = need("a voter line");
    const std::string& body = line.text;
    std::size_t offset = 0;
    while (offset < body.size() &&
           std::isspace(static_cast<unsigned char>(body[offset])))
      ++offset;

    int multiplicity = 1;
    {
      std::size_t colon = body.find(':');
      if (colon != std::string::npos) {
        bool digits = colon > offset;
        for (std::size_t i = offset; i < colon; ++i)
          if (!std::isdigit(static_cast<unsigned char>(body[i]))) digits = false;
        if (!digits)
          throw ParseError("multiplicity prefix must be a positive integer",
                           line.number, static_cast<int>(offset) + 1);
        multiplicity = std::stoi(body.substr(offset, colon - offset));
        if (multiplicity < 1)
          throw ParseError("multiplicity must be at least 1", line.number,
                           static_cast<int>(offset) + 1);
        offset = colon + 1;
        while (offset < body.size() &&
               std::isspace(static_cast<unsigned char>(body[offset])))
          ++offset;
      }
    }
    if (offset >= body.size())
      throw ParseError("empty voter line", line.number,
                       static_cast<int>(offset) + 1);

    Relation rel;
    if (body[offset] == '*')
      rel = parse_pair_form(body, offset + 1, profile, line.number);
    else
      rel = parse_tier_form(body, offset, profile, line.number);

    if (profile.n() + multiplicity > n)
      throw ParseError("voter multiplicities exceed the declared count of " +
                           std::to_string(n),
                       line.number, 1);
    for (int i = 0; i < multiplicity; ++i) profile.voters.push_back(rel);
    ++at;
  }

  if (at < lines.size())
    throw ParseError("trailing content after the last declared voter",
                     lines[at].number, 1);
  profile.validate();
  return profile;
}

std::string serialize_relation(const Relation& rel,
                               const std::vector<std::string>& labels) {
  const int m = rel.size();
  std::string out;
  if (rel.is_transitive()) {
    // weak order: tier of a = number of alternatives it weakly dominates
    std::vector<std::pair<int, Alt>> score;
    score.reserve(static_cast<std::size_t>(m));
    for (Alt a = 0; a < m; ++a)
      score.emplace_back(-__builtin_popcount(rel.weak_row(a)), a);
    std::sort(score.begin(), score.end());
    for (std::size_t i = 0; i < score.size(); ++i) {
      if (i > 0)
        out += (score[i].first == score[i - 1].first) ? '=' : '>';
      out += labels[static_cast<std::size_t>(score[i].second)];
    }
  } else {
    out = "*";
    for (Alt a = 0; a < m; ++a)
      for (Alt b = a + 1; b < m; ++b) {
        out += ' ';
        switch (rel.verdict(a, b)) {
          case Verdict::FirstBeatsSecond:
            out += labels[static_cast<std::size_t>(a)] + ">" +
                   labels[static_cast<std::size_t>(b)];
            break;
          case Verdict::Tied:
            out += labels[static_cast<std::size_t>(a)] + "=" +
                   labels[static_cast<std::size_t>(b)];
            break;
          case Verdict::SecondBeatsFirst:
            out += labels[static_cast<std::size_t>(b)] + ">" +
                   labels[static_cast<std::size_t>(a)];
            break;
        }
      }
  }
  return out;
}

std::string serialize_profile(const Profile& profile) {
  std::ostringstream out;
  out << profile.m() << ' ' << profile.n() << '\n';
  out << "labels:";
  for (const std::string& label : profile.labels) out << ' ' << label;
  out << '\n';
  for (int i = 0; i < profile.n();) {
    int j = i;
    while (j < profile.n() &&
           profile.voters[static_cast<std::size_t>(j)] ==
               profile.voters[static_cast<std::size_t>(i)])
      ++j;
    out << (j - i) << ": "
        << serialize_relation(profile.voters[static_cast<std::size_t>(i)],
                              profile.labels)
        << '\n';
    i = j;
  }
  return out.str();
}

std::string label_list(const AltSet set, const std::vector<std::string>& labels,
                       bool sort_by_label) {
  std::vector<std::string> names;
  for (Alt a : set.each()) names.push_back(labels[static_cast<std::size_t>(a)]);
  if (sort_by_label) std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ' ';
    out += names[i];
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string pref_name(PrefExtension pref) {
  return pref == PrefExtension::Weak ? "weak" : "strict";
}

std::string misreport_name(MisreportClass misreport) {
  return misreport == MisreportClass::Unrestricted ? "any" : "keep-ties";
}

std::string mode_name(RelationMode mode) {
  switch (mode) {
    case RelationMode::StrictLinear: return "strict";
    case RelationMode::WeakOrder: return "weak";
    case RelationMode::GeneralComplete: return "general";
  }
  throw InternalError("unhandled relation mode");
}

PrefExtension pref_from_name(const std::string& name) {
  if (name == "weak") return PrefExtension::Weak;
  if (name == "strict") return PrefExtension::Strict;
  throw ValidationError("unknown preference extension: " + name);
}

MisreportClass misreport_from_name(const std::string& name) {
  if (name == "any") return MisreportClass::Unrestricted;
  if (name == "keep-ties") return MisreportClass::IndifferencePreserving;
  throw ValidationError("unknown misreport class: " + name);
}

RelationMode mode_from_name(const std::string& name) {
  if (name == "strict") return RelationMode::StrictLinear;
  if (name == "weak") return RelationMode::WeakOrder;
  if (name == "general") return RelationMode::GeneralComplete;
  throw ValidationError("unknown relation mode: " + name);
}

namespace {

std::string domain_line(const DomainSpec& spec) {
  std::ostringstream out;
  out << "domain: n=" << spec.n << " m=" << spec.m
      << " mode=" << mode_name(spec.mode)
      << " style=" << (spec.style == EnumStyle::Exhaustive ? "exhaustive" : "sampled")
      << " samples=" << spec.samples << " seed=" << spec.seed;
  return out.str();
}

nlohmann::json domain_to_json(const DomainSpec& spec) {
  return {{"n", spec.n},
          {"m", spec.m},
          {"mode", mode_name(spec.mode)},
          {"style", spec.style == EnumStyle::Exhaustive ? "exhaustive" : "sampled"},
          {"samples", spec.samples},
          {"seed", spec.seed}};
}

}  // namespace

std::string serialize_witness(const std::string& scf_key,
                              const ManipulationWitness& witness) {
  std::ostringstream out;
  out << "kind: manipulation\n";
  out << "scf: " << scf_key << '\n';
  out << "pref: " << pref_name(witness.flags.pref) << '\n';
  out << "misreport: " << misreport_name(witness.flags.misreport) << '\n';
  out << "outcome-change: "
      << (witness.flags.require_outcome_change ? "required" : "not-required") << '\n';
  out << "group:";
  for (int i : witness.group) out << ' ' << i;
  out << '\n';
  const auto& labels = witness.truth.labels;
  out << "feasible: " << label_list(witness.feasible, labels, false) << '\n';
  out << "before: " << label_list(witness.before, labels, false) << '\n';
  out << "after: " << label_list(witness.after, labels, false) << '\n';
  out << "verified: " << (witness.verified ? "yes" : "no") << '\n';
  out << "truth:\n" << serialize_profile(witness.truth);
  out << "misreport-profile:\n" << serialize_profile(witness.misreport);
  return with_checksum(out.str());
}

std::string serialize_axiom_report(const AxiomReport& report) {
  std::ostringstream out;
  out << "kind: axiom-report\n";
  out << "axiom: " << axiom_name(report.axiom) << '\n';
  out << "scf: " << report.scf_key << '\n';
  out << domain_line(report.domain) << '\n';
  out << "result: " << (report.pass ? "pass" : "fail") << '\n';
  out << "instances: " << report.instances_checked << '\n';
  out << "skipped: " << report.skipped << '\n';
  out << "exhaustive: " << (report.exhaustive ? "yes" : "no") << '\n';
  if (report.witness) {
    const AxiomWitness& w = *report.witness;
    const auto& labels = w.profile_before.labels;
    out << "feasible: " << label_list(w.feasible, labels, false) << '\n';
    if (w.voter >= 0) out << "voter: " << w.voter << '\n';
    if (w.x >= 0) out << "x: " << labels[static_cast<std::size_t>(w.x)] << '\n';
    if (w.a >= 0) out << "a: " << labels[static_cast<std::size_t>(w.a)] << '\n';
    if (w.b >= 0) out << "b: " << labels[static_cast<std::size_t>(w.b)] << '\n';
    if (!w.subset_b.empty())
      out << "subset: " << label_list(w.subset_b, labels, false) << '\n';
    out << "chosen-before: " << label_list(w.chosen_before, labels, false) << '\n';
    out << "chosen-after: " << label_list(w.chosen_after, labels, false) << '\n';
    out << "profile-before:\n" << serialize_profile(w.profile_before);
    out << "profile-after:\n" << serialize_profile(w.profile_after);
  }
  return with_checksum(out.str());
}

std::string serialize_sweep_report(const std::string& scf_key,
                                   const DomainSpec& spec,
                                   const SweepReport& report) {
  std::ostringstream out;
  out << "kind: strategyproofness-report\n";
  out << "scf: " << scf_key << '\n';
  out << domain_line(spec) << '\n';
  out << "result: " << (report.pass ? "pass" : "fail") << '\n';
  out << "profiles: " << report.profiles_checked << '\n';
  out << "candidates: " << report.candidates_evaluated << '\n';
  out << "skipped: " << report.skipped << '\n';
  out << "exhaustive: " << (report.exhaustive ? "yes" : "no") << '\n';
  std::string body = out.str();
  if (report.witness) body += serialize_witness(scf_key, *report.witness);
  return with_checksum(std::move(body));
}

std::string serialize_participation_report(const std::string& scf_key,
                                           const DomainSpec& spec,
                                           const ParticipationReport& report) {
  std::ostringstream out;
  out << "kind: participation-report\n";
  out << "scf: " << scf_key << '\n';
  out << domain_line(spec) << '\n';
  out << "result: " << (report.pass ? "pass" : "fail") << '\n';
  out << "instances: " << report.instances_checked << '\n';
  out << "skipped: " << report.skipped << '\n';
  out << "exhaustive: " << (report.exhaustive ? "yes" : "no") << '\n';
  if (report.witness) {
    const ParticipationWitness& w = *report.witness;
    const auto& labels = w.base.labels;
    out << "feasible: " << label_list(w.feasible, labels, false) << '\n';
    out << "joiner: " << serialize_relation(w.joiner, labels) << '\n';
    out << "without-joiner: " << label_list(w.without_joiner, labels, false) << '\n';
    out << "with-joiner: " << label_list(w.with_joiner, labels, false) << '\n';
    out << "base-profile:\n" << serialize_profile(w.base);
  }
  return with_checksum(out.str());
}

nlohmann::json witness_to_json(const std::string& scf_key,
                               const ManipulationWitness& witness) {
  const auto& labels = witness.truth.labels;
  return {{"kind", "manipulation"},
          {"scf", scf_key},
          {"pref", pref_name(witness.flags.pref)},
          {"misreport", misreport_name(witness.flags.misreport)},
          {"outcome_change_required", witness.flags.require_outcome_change},
          {"group", witness.group},
          {"feasible", label_list(witness.feasible, labels, false)},
          {"before", label_list(witness.before, labels, false)},
          {"after", label_list(witness.after, labels, false)},
          {"verified", witness.verified},
          {"truth", serialize_profile(witness.truth)},
          {"misreport_profile", serialize_profile(witness.misreport)}};
}

nlohmann::json axiom_report_to_json(const AxiomReport& report) {
  nlohmann::json j{{"kind", "axiom-report"},
                   {"axiom", axiom_name(report.axiom)},
                   {"scf", report.scf_key},
                   {"domain", domain_to_json(report.domain)},
                   {"pass", report.pass},
                   {"instances", report.instances_checked},
                   {"skipped", report.skipped},
                   {"exhaustive", report.exhaustive}};
  if (report.witness) {
    const AxiomWitness& w = *report.witness;
    const auto& labels = w.profile_before.labels;
    nlohmann::json jw{{"feasible", label_list(w.feasible, labels, false)},
                      {"chosen_before", label_list(w.chosen_before, labels, false)},
                      {"chosen_after", label_list(w.chosen_after, labels, false)},
                      {"profile_before", serialize_profile(w.profile_before)},
                      {"profile_after", serialize_profile(w.profile_after)}};
    if (w.voter >= 0) jw["voter"] = w.voter;
    if (w.x >= 0) jw["x"] = labels[static_cast<std::size_t>(w.x)];
    if (w.a >= 0) jw["a"] = labels[static_cast<std::size_t>(w.a)];
    if (w.b >= 0) jw["b"] = labels[static_cast<std::size_t>(w.b)];
    if (!w.subset_b.empty()) jw["subset"] = label_list(w.subset_b, labels, false);
    j["witness"] = std::move(jw);
  }
  return j;
}

nlohmann::json sweep_report_to_json(const std::string& scf_key,
                                    const DomainSpec& spec,
                                    const SweepReport& report) {
  nlohmann::json j{{"kind", "strategyproofness-report"},
                   {"scf", scf_key},
                   {"domain", domain_to_json(spec)},
                   {"pass", report.pass},
                   {"profiles", report.profiles_checked},
                   {"candidates", report.candidates_evaluated},
                   {"skipped", report.skipped},
                   {"exhaustive", report.exhaustive}};
  if (report.witness) j["witness"] = witness_to_json(scf_key, *report.witness);
  return j;
}

nlohmann::json participation_report_to_json(const std::string& scf_key,
                                            const DomainSpec& spec,
                                            const ParticipationReport& report) {
  nlohmann::json j{{"kind", "participation-report"},
                   {"scf", scf_key},
                   {"domain", domain_to_json(spec)},
                   {"pass", report.pass},
                   {"instances", report.instances_checked},
                   {"skipped", report.skipped},
                   {"exhaustive", report.exhaustive}};
  if (report.witness) {
    const ParticipationWitness& w = *report.witness;
    const auto& labels = w.base.labels;
    j["witness"] = {{"feasible", label_list(w.feasible, labels, false)},
                    {"joiner", serialize_relation(w.joiner, labels)},
                    {"without_joiner", label_list(w.without_joiner, labels, false)},
                    {"with_joiner", label_list(w.with_joiner, labels, false)},
                    {"base_profile", serialize_profile(w.base)}};
  }
  return j;
}

}  // namespace choicelab::io
