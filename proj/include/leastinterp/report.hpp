#pragma once

#include <string>
#include <vector>

#include "leastinterp/config.hpp"

namespace leastinterp {

constexpr int kSchemaVersion = 1;

struct RunOutcome {
  std::string command;
  std::string json;  // rendered report, newline-terminated
  int exitCode = 0;  // 0 ok, 1 usage error, 2 mathematical error
  std::string error;  // "module.Code: message" when exitCode != 0
};

const std::vector<std::string>& commandNames();

// Runs one subcommand (or report-all). An empty command falls back to cfg.command.
// Errors are reported inside the JSON; only exceptions outside the error taxonomy escape.
RunOutcome runCommand(const RunConfig& cfg, std::string command = {});

}  // namespace leastinterp
