#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace permpow::cli {

/// One line of the JSON-lines result cache. The (kind, parameters) pair is
/// the unique key; re-running a cached query must reproduce its count.
struct CacheRecord {
  int schema_version = 1;
  std::string kind;
  std::map<std::string, std::string> parameters;
  std::string count; // decimal string, may exceed machine words
  long long elapsed_millis = 0;
  std::string tool_version;
  std::string timestamp; // UTC, ISO-8601

  std::string to_json_line() const;
  static CacheRecord from_json_line(const std::string& line);
};

enum class CacheOutcome {
  appended, ///< new key, record written
  matched,  ///< key present with the same count; nothing written
  mismatch, ///< key present with a different count
};

std::optional<CacheRecord> cache_find(const std::filesystem::path& file,
                                      const std::string& kind,
                                      const std::map<std::string, std::string>& parameters);

/// Appends the record unless its key already exists; an existing key with a
/// different count reports a mismatch and leaves the file untouched.
CacheOutcome cache_append_or_check(const std::filesystem::path& file, const CacheRecord& record);

std::string utc_timestamp();

} // namespace permpow::cli
