#include <algorithm>
#include <istream>

#include "lab.hpp"

namespace errorlab {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& is, const std::vector<std::string>& allowed) {
  std::map<std::string, std::string> out;
  std::string line;
  int n = 0;
  while (std::getline(is, line)) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(n) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(n) + ": empty key");
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError("line " + std::to_string(n) + ": unknown key '" + key + "'");
    if (!out.emplace(key, value).second) throw ConfigError("line " + std::to_string(n) + ": duplicate key '" + key + "'");
  }
  return out;
}

}  // namespace errorlab
