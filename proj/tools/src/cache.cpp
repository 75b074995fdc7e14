#include "cache.hpp"

#include <ctime>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace permpow::cli {

using nlohmann::json;

std::string CacheRecord::to_json_line() const {
  json j;
  j["schemaVersion"] = schema_version;
  j["kind"] = kind;
  j["parameters"] = parameters;
  j["count"] = count;
  j["elapsedMillis"] = elapsed_millis;
  j["toolVersion"] = tool_version;
  j["timestamp"] = timestamp;
  return j.dump();
}

CacheRecord CacheRecord::from_json_line(const std::string& line) {
  const json j = json::parse(line);
  CacheRecord r;
  r.schema_version = j.at("schemaVersion").get<int>();
  r.kind = j.at("kind").get<std::string>();
  r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  r.count = j.at("count").get<std::string>();
  r.elapsed_millis = j.at("elapsedMillis").get<long long>();
  r.tool_version = j.at("toolVersion").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

std::optional<CacheRecord> cache_find(const std::filesystem::path& file,
                                      const std::string& kind,
                                      const std::map<std::string, std::string>& parameters) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CacheRecord r = CacheRecord::from_json_line(line);
    if (r.kind == kind && r.parameters == parameters) return r;
  }
  return std::nullopt;
}

CacheOutcome cache_append_or_check(const std::filesystem::path& file, const CacheRecord& record) {
  const auto existing = cache_find(file, record.kind, record.parameters);
  if (existing) return existing->count == record.count ? CacheOutcome::matched : CacheOutcome::mismatch;
  std::ofstream out(file, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file: " + file.string());
  out << record.to_json_line() << '\n';
  return CacheOutcome::appended;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace permpow::cli
