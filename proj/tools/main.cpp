#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "leastinterp/errors.hpp"
#include "leastinterp/report.hpp"

int main(int argc, char** argv) {
  using namespace leastinterp;
  CLI::App app{"Least interpolation and local invariants of embedded germs"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  std::string configPath, outPath;
  std::optional<int> truncation, degree;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", configPath, "run description")->required();
  app.add_option("--out", outPath, "write the JSON report here instead of stdout");
  app.add_option("--truncation", truncation, "truncation order K for series components")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "sampling seed");
  app.add_option("--degree", degree, "polynomial degree d")->check(CLI::NonNegativeNumber);
  for (const auto& name : commandNames()) app.add_subcommand(name, "run " + name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  RunConfig cfg;
  try {
    cfg = loadConfig(configPath);
  } catch (const Error& e) {
    std::cerr << "leastinterp: " << e.qualifiedCode() << ": " << e.what() << "\n";
    return 1;
  }
  if (truncation) cfg.truncation = *truncation;
  if (degree) cfg.degree = *degree;
  if (seed) cfg.seed = *seed;
  std::string command = app.get_subcommands().empty() ? cfg.command : app.get_subcommands().front()->get_name();
  if (command.empty()) {
    std::cerr << "leastinterp: no subcommand given and the config has no 'command'\n";
    return 1;
  }

  RunOutcome r = runCommand(cfg, command);
  if (outPath.empty()) outPath = cfg.out;
  if (outPath.empty()) {
    std::cout << r.json;
  } else {
    std::ofstream f(outPath, std::ios::binary);
    if (!(f << r.json)) {
      std::cerr << "leastinterp: cannot write " << outPath << "\n";
      return 1;
    }
  }
  if (r.exitCode != 0) std::cerr << "leastinterp: " << r.error << "\n";
  return r.exitCode;
}
