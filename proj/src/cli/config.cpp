#include "driftmax/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "driftmax/cli/experiment.hpp"

namespace driftmax::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

ConfigFile parse_config(std::istream& in) {
  ConfigFile out;
  std::map<std::string, std::string>* current = &out.defaults;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#' || text.front() == ';') continue;
    if (text.front() == '[') {
      if (text.back() != ']' || text.size() < 3)
        throw ConfigError("config line " + std::to_string(line_no) + ": malformed section header");
      out.sections.emplace_back(trim(text.substr(1, text.size() - 2)), std::map<std::string, std::string>{});
      current = &out.sections.back().second;
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = lower(trim(text.substr(0, eq)));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    (*current)[key] = value;
  }
  return out;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  return parse_config(in);
}

std::vector<std::pair<std::string, std::map<std::string, std::string>>> ConfigFile::experiments() const {
  if (sections.empty()) return {{"", defaults}};
  std::vector<std::pair<std::string, std::map<std::string, std::string>>> out;
  for (const auto& [name, keys] : sections) {
    auto merged = defaults;
    for (const auto& [k, v] : keys) merged[k] = v;
    out.emplace_back(name, std::move(merged));
  }
  return out;
}

}  // namespace driftmax::cli
