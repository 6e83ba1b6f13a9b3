#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leastinterp {

// Flat "key = value" run description; see docs/config.md for the grammar.
struct RunConfig {
  std::optional<std::size_t> dimension;
  std::vector<std::string> variables;
  std::vector<std::string> targetVariables;
  std::vector<std::string> basepoint;   // scalar literals
  std::vector<std::string> components;  // expressions in the source variables
  std::vector<std::string> generators;  // polynomials in the source variables
  int degree = 2;
  std::optional<int> truncation;
  int truncationCap = 256;
  std::uint64_t seed = 20240531;
  std::size_t samples = 5;
  std::string command;
  std::string target;  // polynomial to project
  std::string out;
};

// Throws ConfigError naming the origin and line.
RunConfig parseConfig(std::string_view text, const std::string& origin = "<config>");
RunConfig loadConfig(const std::string& path);

// Split at commas outside parentheses, after dropping one pair of parentheses around everything.
std::vector<std::string> splitTopLevel(std::string_view text);

}  // namespace leastinterp
