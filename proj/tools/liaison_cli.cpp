// liaison: command-line front end.
//
//   liaison analyze FILE [--seed N] [--format text|json] [--window W]
//   liaison selflink-search FILE [--degrees M1,M2] [--max-degree D] [--budget B]
//   liaison gherardelli FILE
//   liaison link FILE
//
// Exit codes: 0 ok, 1 usage, 2 parse, 3 precondition, 4 internal.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "liaison/analysis.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kPrecondition = 3, kInternal = 4 };

struct Flags {
  std::string file;
  std::uint64_t seed = 0;
  std::string format = "text";
  int window = 4;
  int max_degree = 6;
  long budget = 200;
  std::string degrees;
};

void add_common(CLI::App* cmd, Flags& flags) {
  cmd->add_option("file", flags.file, "ideal file ('-' for stdin)")->required();
  cmd->add_option("--seed", flags.seed, "seed for randomized searches");
  cmd->add_option("--format", flags.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--window", flags.window, "degree window for the Noether identity")->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-degree", flags.max_degree, "largest form degree tried by searches")
      ->check(CLI::PositiveNumber);
}

int run(liaison::Command command, const Flags& flags) {
  std::string text;
  if (flags.file == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    std::ifstream in(flags.file);
    if (!in) {
      std::cerr << "cannot open " << flags.file << "\n";
      return kUsage;
    }
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }

  liaison::AnalysisOptions opt;
  opt.seed = flags.seed;
  opt.window = flags.window;
  opt.max_degree = flags.max_degree;
  opt.budget = flags.budget;
  if (!flags.degrees.empty()) {
    int m1 = 0, m2 = 0;
    char comma = 0;
    std::istringstream ds(flags.degrees);
    if (!(ds >> m1 >> comma >> m2) || comma != ',' || m1 < 1 || m2 < 1) {
      std::cerr << "--degrees expects M1,M2\n";
      return kUsage;
    }
    opt.degrees.emplace(m1, m2);
  }

  liaison::IdealFile file;
  try {
    file = liaison::parse_ideal_file(text);
  } catch (const liaison::ParseError& e) {
    std::cerr << flags.file << ":" << e.what() << "\n";
    return kParse;
  }

  try {
    auto report = liaison::run_analysis(file, command, opt);
    std::cout << (flags.format == "json" ? liaison::to_json_string(report) : liaison::to_text(report));
    return kOk;
  } catch (const liaison::Error& e) {
    std::cerr << e.what() << "\n";
    return e.is_precondition() ? kPrecondition : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linkage computations on ideals of projective schemes"};
  app.require_subcommand(1);
  Flags flags;

  auto* analyze = app.add_subcommand("analyze", "invariants, CM status, subcanonical test, linkage verdicts");
  add_common(analyze, flags);
  auto* search = app.add_subcommand("selflink-search", "search for a complete intersection self-linking X");
  add_common(search, flags);
  search->add_option("--degrees", flags.degrees, "degrees M1,M2 of the linking forms");
  search->add_option("--budget", flags.budget, "samples when the search is not exhaustive")->check(CLI::PositiveNumber);
  auto* gher = app.add_subcommand("gherardelli", "find f3 with Y = F1 n F2 n F3");
  add_common(gher, flags);
  auto* lnk = app.add_subcommand("link", "residual of X in the complete intersection of the link block");
  add_common(lnk, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*analyze) return run(liaison::Command::Analyze, flags);
  if (*search) return run(liaison::Command::SelfLinkSearch, flags);
  if (*gher) return run(liaison::Command::Gherardelli, flags);
  return run(liaison::Command::Link, flags);
}
