#include "config.hpp"

#include <fstream>
#include <stdexcept>

namespace permpow::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

} // namespace

ToolConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open config file: " + file.string());
  ToolConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key == "enum_bound")
      cfg.enum_bound = std::stoi(value);
    else if (key == "syt_bound")
      cfg.syt_bound = std::stoi(value);
    else if (key == "threads")
      cfg.threads = std::stoi(value);
    else if (key == "witness_cap")
      cfg.witness_cap = std::stoi(value);
    else if (key == "cache")
      cfg.cache_path = value;
    else
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  return cfg;
}

} // namespace permpow::cli
