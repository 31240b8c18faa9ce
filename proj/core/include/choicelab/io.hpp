#pragma once

#include <string>
#include <string_view>

#include "choicelab/axioms.hpp"
#include "choicelab/manipulation.hpp"

#include <nlohmann/json.hpp>

namespace choicelab::io {

// Syntax error with a 1-based position in the input text.
class ParseError : public ValidationError {
public:
  ParseError(const std::string& message, int line, int column)
      : ValidationError("line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Profile text format:
//   line 1:  `m n`  (alternatives, total voters)
//   line 2:  optional `labels: x y z ...`
//   then voter lines until their multiplicities sum to n:
//     `k: tier>tier>...`      tiers are `=`-joined labels, best tier first
//     `k: * a>b a=c b>c ...`  explicit verdict per unordered pair, for
//                             relations that are not weak orders
//   The multiplicity prefix `k:` is optional and defaults to 1. `#` starts
//   a comment.
Profile parse_profile(const std::string& text);

// Canonical form: labels line always present, consecutive identical voters
// grouped with an explicit multiplicity, weak orders written as tiers and
// other relations in the per-pair form. parse(serialize(p)) == p.
std::string serialize_profile(const Profile& profile);

// One voter-line body (no multiplicity prefix).
std::string serialize_relation(const Relation& rel,
                               const std::vector<std::string>& labels);

// Members of `set` as space-joined labels; sorted by label (human) or by
// index (machine).
std::string label_list(const AltSet set, const std::vector<std::string>& labels,
                       bool sort_by_label);

// 64-bit FNV-1a; used as the replay checksum of witness blocks.
std::uint64_t fnv1a64(std::string_view s);

// Appends `checksum: <16 hex digits>` over the body.
std::string with_checksum(std::string body);

std::string pref_name(PrefExtension pref);            // weak | strict
std::string misreport_name(MisreportClass misreport); // any | keep-ties
std::string mode_name(RelationMode mode);             // strict | weak | general
PrefExtension pref_from_name(const std::string& name);
MisreportClass misreport_from_name(const std::string& name);
RelationMode mode_from_name(const std::string& name);

// Key-value text blocks. Deterministic byte-for-byte for equal inputs; the
// final line is `checksum: <hex>` over everything above it.
std::string serialize_witness(const std::string& scf_key,
                              const ManipulationWitness& witness);
std::string serialize_axiom_report(const AxiomReport& report);
std::string serialize_sweep_report(const std::string& scf_key,
                                   const DomainSpec& spec,
                                   const SweepReport& report);
std::string serialize_participation_report(const std::string& scf_key,
                                           const DomainSpec& spec,
                                           const ParticipationReport& report);

nlohmann::json witness_to_json(const std::string& scf_key,
                               const ManipulationWitness& witness);
nlohmann::json axiom_report_to_json(const AxiomReport& report);
nlohmann::json sweep_report_to_json(const std::string& scf_key,
                                    const DomainSpec& spec,
                                    const SweepReport& report);
nlohmann::json participation_report_to_json(const std::string& scf_key,
                                            const DomainSpec& spec,
                                            const ParticipationReport& report);

}  // namespace choicelab::io
