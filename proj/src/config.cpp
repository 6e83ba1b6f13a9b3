#include "leastinterp/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "leastinterp/errors.hpp"

namespace leastinterp {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

bool wrapsAll(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0 && i + 1 < s.size()) return false;
  }
  return true;
}

template <typename T>
T parseNumber(const std::string& v, const std::string& where) {
  T out{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw Error(ErrorCode::ConfigError, "frontend", where + ": expected a non-negative integer, got '" + v + "'");
  return out;
}

}  // namespace

std::vector<std::string> splitTopLevel(std::string_view text) {
  std::string s = trim(text);
  if (wrapsAll(s)) s = trim(std::string_view(s).substr(1, s.size() - 2));
  std::vector<std::string> out;
  if (s.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.push_back(trim(std::string_view(s).substr(start, i - start)));
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

RunConfig parseConfig(std::string_view text, const std::string& origin) {
  static const std::set<std::string> scalarKeys = {"dimension", "variables",      "target_variables", "basepoint",
                                                   "components", "generators",    "degree",           "truncation",
                                                   "truncation_cap", "seed",      "samples",          "command",
                                                   "target",     "out"};
  static const std::set<std::string> listKeys = {"components", "generators"};
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::string where = origin + ":" + std::to_string(lineNo);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ConfigError, "frontend", where + ": expected 'key = value'");
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    bool append = key.size() > 2 && key.compare(key.size() - 2, 2, "[]") == 0;
    if (append) key = trim(std::string_view(key).substr(0, key.size() - 2));
    if (!scalarKeys.count(key)) throw Error(ErrorCode::ConfigError, "frontend", where + ": unknown key '" + key + "'");
    if (append && !listKeys.count(key))
      throw Error(ErrorCode::ConfigError, "frontend", where + ": '" + key + "' is not a list key");
    if (!append && !seen.insert(key).second)
      throw Error(ErrorCode::ConfigError, "frontend", where + ": duplicate key '" + key + "'");
    if (append) seen.insert(key + "[]");
    if (listKeys.count(key) && seen.count(key) && seen.count(key + "[]"))
      throw Error(ErrorCode::ConfigError, "frontend", where + ": mix of '" + key + "' and '" + key + "[]'");
    if (value.empty()) throw Error(ErrorCode::ConfigError, "frontend", where + ": empty value for '" + key + "'");

    if (key == "dimension") {
      cfg.dimension = parseNumber<std::size_t>(value, where);
    } else if (key == "variables") {
      cfg.variables = splitTopLevel(value);
    } else if (key == "target_variables") {
      cfg.targetVariables = splitTopLevel(value);
    } else if (key == "basepoint") {
      cfg.basepoint = splitTopLevel(value);
    } else if (key == "components" || key == "generators") {
      auto& dst = key == "components" ? cfg.components : cfg.generators;
      if (append) {
        dst.push_back(value);
      } else {
        auto items = splitTopLevel(value);
        dst.insert(dst.end(), items.begin(), items.end());
      }
    } else if (key == "degree") {
      cfg.degree = parseNumber<int>(value, where);
    } else if (key == "truncation") {
      cfg.truncation = parseNumber<int>(value, where);
      if (*cfg.truncation < 1) throw Error(ErrorCode::ConfigError, "frontend", where + ": truncation must be >= 1");
    } else if (key == "truncation_cap") {
      cfg.truncationCap = parseNumber<int>(value, where);
    } else if (key == "seed") {
      cfg.seed = parseNumber<std::uint64_t>(value, where);
    } else if (key == "samples") {
      cfg.samples = parseNumber<std::size_t>(value, where);
    } else if (key == "command") {
      cfg.command = value;
    } else if (key == "target") {
      cfg.target = value;
    } else if (key == "out") {
      cfg.out = value;
    }
  }
  if (!cfg.components.empty() && !cfg.generators.empty())
    throw Error(ErrorCode::ConfigError, "frontend", origin + ": give either components or generators, not both");
  if (cfg.components.empty() && cfg.generators.empty())
    throw Error(ErrorCode::ConfigError, "frontend", origin + ": no components or generators");
  if (cfg.basepoint.empty()) throw Error(ErrorCode::ConfigError, "frontend", origin + ": missing basepoint");
  if (cfg.dimension && *cfg.dimension != cfg.basepoint.size())
    throw Error(ErrorCode::ConfigError, "frontend", origin + ": basepoint arity differs from dimension");
  if (!cfg.variables.empty() && cfg.variables.size() != cfg.basepoint.size())
    throw Error(ErrorCode::ConfigError, "frontend", origin + ": one variable name per source coordinate required");
  if (!cfg.targetVariables.empty() && cfg.targetVariables.size() != cfg.components.size())
    throw Error(ErrorCode::ConfigError, "frontend", origin + ": one target name per component required");
  return cfg;
}

RunConfig loadConfig(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::IoError, "frontend", "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parseConfig(ss.str(), path);
}

}  // namespace leastinterp
