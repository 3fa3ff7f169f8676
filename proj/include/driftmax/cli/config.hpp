#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

namespace driftmax::cli {

/// Flat key=value text with optional [section] headers. Keys before the first
/// header are defaults shared by every section. '#' and ';' start comments.
struct ConfigFile {
  std::map<std::string, std::string> defaults;
  /// In file order.
  std::vector<std::pair<std::string, std::map<std::string, std::string>>> sections;

  /// One merged key map per section (defaults overlaid by the section), or
  /// just the defaults when the file has no sections.
  std::vector<std::pair<std::string, std::map<std::string, std::string>>> experiments() const;
};

/// Throws ConfigError on malformed lines. Keys are lowercased and trimmed.
ConfigFile parse_config(std::istream& in);
ConfigFile load_config(const std::string& path);

}  // namespace driftmax::cli
