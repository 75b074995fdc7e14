#pragma once

#include <filesystem>
#include <string>

namespace permpow::cli {

/// Tool settings: defaults, overridden by the optional key=value config file,
/// overridden in turn by command-line flags. The cache path additionally
/// honors the PERMPOW_CACHE environment variable (flag > env > config).
struct ToolConfig {
  int enum_bound = 11;
  int syt_bound = 12;
  int threads = 1;
  int witness_cap = 9;
  std::string cache_path = "permpow_cache.jsonl";
};

/// Parses a config file: one key=value per line, '#' comments and blank
/// lines ignored. Unknown keys are rejected.
ToolConfig load_config(const std::filesystem::path& file);

} // namespace permpow::cli
