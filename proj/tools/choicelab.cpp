// choicelab: compute choice sets, sweep axioms, search for manipulations,
// and reproduce the desk-scale constructions against golden files.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "recipes.hpp"

namespace {

using namespace choicelab;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

struct CommonOpts {
  std::string scf;
  std::string input;
  std::string axiom;
  int n = 1;
  int m = 3;
  std::string mode = "general";
  int group_size = 1;
  std::string pref = "weak";
  std::string misreport = "any";
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  bool bless = false;
  std::string format = "human";
};

void add_domain_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.n, "number of voters");
  cmd->add_option("--m", o.m, "number of alternatives");
  cmd->add_option("--mode", o.mode, "relation domain")
      ->check(CLI::IsMember({"strict", "weak", "general"}));
  cmd->add_option("--seed", o.seed, "sampling seed");
  cmd->add_option("--samples", o.samples, "sample count (0 = exhaustive)");
}

void add_format_flag(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"human", "machine"}));
}

DomainSpec domain_from(const CommonOpts& o) {
  return DomainSpec{.n = o.n,
                    .m = o.m,
                    .mode = io::mode_from_name(o.mode),
                    .style = o.samples > 0 ? EnumStyle::Sampled
                                           : EnumStyle::Exhaustive,
                    .samples = o.samples,
                    .seed = o.seed};
}

ModeFlags flags_from(const CommonOpts& o) {
  return ModeFlags{.pref = io::pref_from_name(o.pref),
                   .misreport = io::misreport_from_name(o.misreport),
                   .require_outcome_change = true,
                   .max_group_size = o.group_size};
}

int run_compute(const CommonOpts& o) {
  const Profile profile = io::parse_profile(read_input(o.input));
  const AltSet universe = profile.universe();
  for (const std::string& key : split_csv(o.scf)) {
    const ScfDescriptor scf = recipes::resolve_scf(key);
    const AltSet choice = apply_scf(scf, profile, universe);
    if (o.format == "machine")
      std::cout << key << '\t' << io::label_list(choice, profile.labels, false)
                << '\n';
    else
      std::cout << key << ": " << io::label_list(choice, profile.labels, true)
                << '\n';
  }
  return kExitOk;
}

int run_axioms(const CommonOpts& o) {
  const Axiom axiom = axiom_from_name(o.axiom);
  const DomainSpec domain = domain_from(o);
  int exit = kExitOk;
  for (const std::string& key : split_csv(o.scf)) {
    const ScfDescriptor scf = recipes::resolve_scf(key);
    const AxiomReport report = check_axiom(axiom, scf, domain);
    std::cout << io::serialize_axiom_report(report);
    if (report.witness && !replay_axiom_witness(axiom, scf, *report.witness)) {
      std::cout << "replay: failed\n";
      exit = kExitMismatch;
    }
  }
  return exit;
}

int run_manipulate(const CommonOpts& o) {
  const ModeFlags flags = flags_from(o);
  int exit = kExitOk;
  for (const std::string& key : split_csv(o.scf)) {
    const ScfDescriptor scf = recipes::resolve_scf(key);
    if (!o.input.empty()) {
      const Profile profile = io::parse_profile(read_input(o.input));
      auto witness =
          find_manipulation(scf, profile, profile.universe(), flags);
      if (witness) {
        ManipulationWitness check = *witness;
        if (!verify_manipulation(scf, check)) exit = kExitMismatch;
        std::cout << io::serialize_witness(key, *witness);
      } else {
        std::cout << "kind: manipulation-search\nscf: " << key
                  << "\nresult: pass\n";
      }
    } else {
      const DomainSpec domain = domain_from(o);
      const SweepReport report =
          check_group_strategyproofness(scf, domain, flags);
      std::cout << io::serialize_sweep_report(key, domain, report);
      if (report.witness) {
        ManipulationWitness check = *report.witness;
        if (!verify_manipulation(scf, check)) exit = kExitMismatch;
      }
    }
  }
  return exit;
}

int run_participation(const CommonOpts& o) {
  const DomainSpec domain = domain_from(o);
  for (const std::string& key : split_csv(o.scf)) {
    const ScfDescriptor scf = recipes::resolve_scf(key);
    const ParticipationReport report = check_participation(scf, domain);
    std::cout << io::serialize_participation_report(key, domain, report);
    if (report.witness && scf.pairwise)
      std::cout << io::serialize_witness(key,
                                         prop3_reduction(scf, *report.witness));
  }
  return kExitOk;
}

int run_enumerate(const CommonOpts& o) {
  const DomainSpec domain = domain_from(o);
  std::cout << "relations: " << relation_count(domain.m, domain.mode) << '\n';
  std::cout << "profiles: " << profile_count(domain) << '\n';
  std::cout << "feasible-sets: " << nonempty_subsets(AltSet::full(domain.m)).size()
            << '\n';
  return kExitOk;
}

int run_reproduce(const std::string& what, const CommonOpts& o, bool m_given,
                  const std::string& golden_dir) {
  std::vector<recipes::Artifact> artifacts;
  const auto keys = split_csv(o.scf);
  if (what == "thm1") {
    const std::vector<std::string> all{"copeland", "topcycle", "uncovered",
                                       "mc", "bp"};
    const std::vector<int> ms =
        m_given ? std::vector<int>{o.m} : std::vector<int>{3, 4, 5};
    artifacts = recipes::thm1(keys.empty() ? all : keys, ms);
  } else if (what == "thm2") {
    artifacts = keys.empty() ? recipes::thm2_default() : recipes::thm2(keys);
  } else if (what == "thm3") {
    artifacts = keys.empty() ? recipes::thm3_default() : recipes::thm3(keys);
  } else if (what == "prop3") {
    artifacts = recipes::prop3();
  } else if (what == "mctable") {
    artifacts = m_given ? recipes::mctable({o.m}) : recipes::mctable_default();
  } else {
    throw ValidationError("unknown reproduction target: " + what);
  }

  namespace fs = std::filesystem;
  int exit = kExitOk;
  for (const recipes::Artifact& artifact : artifacts) {
    const fs::path path = fs::path(golden_dir) / artifact.name;
    std::cout << artifact.content;
    if (o.bless) {
      fs::create_directories(path.parent_path());
      std::ofstream out(path, std::ios::binary);
      out << artifact.content;
      std::cout << "blessed: " << artifact.name << '\n';
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cout << "golden-missing: " << artifact.name << '\n';
      exit = kExitMismatch;
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (buf.str() == artifact.content) {
      std::cout << "golden-match: " << artifact.name << '\n';
    } else {
      std::cout << "golden-mismatch: " << artifact.name << '\n';
      exit = kExitMismatch;
    }
  }
  return exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"irresolute social choice toolbox"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string reproduce_what;
  std::string golden_dir = "data/golden";

  CLI::App* compute = app.add_subcommand("compute", "evaluate SCFs on a profile");
  compute->add_option("--scf", o.scf, "comma-separated SCF keys")->required();
  compute->add_option("--in", o.input, "profile file ('-' for stdin)")->required();
  add_format_flag(compute, o);

  CLI::App* axioms = app.add_subcommand("axioms", "sweep an axiom over a domain");
  axioms->add_option("--scf", o.scf, "comma-separated SCF keys")->required();
  axioms->add_option("--axiom", o.axiom, "axiom key")->required();
  add_domain_flags(axioms, o);
  add_format_flag(axioms, o);

  CLI::App* manipulate =
      app.add_subcommand("manipulate", "search for group manipulations");
  manipulate->add_option("--scf", o.scf, "comma-separated SCF keys")->required();
  manipulate->add_option("--in", o.input, "profile file (omit for a domain sweep)");
  manipulate->add_option("--group-size", o.group_size, "maximum group size");
  manipulate->add_option("--pref", o.pref, "Kelly extension")
      ->check(CLI::IsMember({"weak", "strict"}));
  manipulate->add_option("--misreport", o.misreport, "misreport class")
      ->check(CLI::IsMember({"any", "keep-ties"}));
  add_domain_flags(manipulate, o);
  add_format_flag(manipulate, o);

  CLI::App* participation =
      app.add_subcommand("participation", "check the no-show property");
  participation->add_option("--scf", o.scf, "comma-separated SCF keys")->required();
  add_domain_flags(participation, o);
  add_format_flag(participation, o);

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "rebuild a desk-scale construction");
  reproduce->add_option("what", reproduce_what, "thm1|thm2|thm3|prop3|mctable")
      ->required();
  reproduce->add_option("--scf", o.scf, "restrict to these SCF keys");
  reproduce->add_option("--m", o.m, "number of alternatives");
  reproduce->add_option("--golden-dir", golden_dir, "golden file directory");
  reproduce->add_flag("--bless", o.bless, "regenerate golden files");
  add_format_flag(reproduce, o);

  CLI::App* enumerate = app.add_subcommand("enumerate", "domain statistics");
  add_domain_flags(enumerate, o);
  add_format_flag(enumerate, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return run_compute(o);
    if (axioms->parsed()) return run_axioms(o);
    if (manipulate->parsed()) return run_manipulate(o);
    if (participation->parsed()) return run_participation(o);
    if (reproduce->parsed())
      return run_reproduce(reproduce_what, o, reproduce->count("--m") > 0,
                           golden_dir);
    if (enumerate->parsed()) return run_enumerate(o);
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
