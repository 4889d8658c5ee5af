#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kat/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "katcheck — decides equivalence and inclusion of KAT expressions, "
      "while-program equivalences, and Hoare triples from goal files"};

  std::vector<std::string> files;
  kat::RunOptions opts;
  std::size_t oracle_bound = 0;

  app.add_option("files", files, "goal files to check")
      ->required()
      ->check(CLI::ExistingFile);
  auto* ob = app.add_option(
      "--oracle-bound", oracle_bound,
      "compare brute-force bounded languages at this letter bound instead of "
      "running the decision procedure");
  app.add_option("--max-states", opts.max_states,
                 "ceiling on bisimulation pair states (default 100000)");
  app.add_option("--atoms-limit", opts.atom_limit,
                 "maximum number of primitive tests (default 12)");
  app.add_option("-H,--hypothesis", opts.hypotheses,
                 "extra hypothesis equation, e.g. '[a];p == [a]' (repeatable)");

  CLI11_PARSE(app, argc, argv);
  if (*ob) opts.oracle_bound = oracle_bound;

  int exit_code = 0;
  for (const auto& file : files) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    kat::RunReport rep = kat::run_goal_text(buf.str(), opts);
    const std::string prefix = files.size() > 1 ? file + ": " : "";
    std::istringstream lines(rep.output);
    for (std::string line; std::getline(lines, line);)
      std::cout << prefix << line << "\n";
    for (const auto& w : rep.warnings) std::cerr << prefix << w << "\n";
    exit_code = std::max(exit_code, rep.exit_code);
  }
  return exit_code;
}
