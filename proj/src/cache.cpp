#include "qfock/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace qfock {

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

static std::string fnv_hex(const std::string& s) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::string Cache::path_of(const std::string& key) const {
  return dir_ + "/" + fnv_hex(key) + ".json";
}

std::optional<nlohmann::json> Cache::get(const std::string& key) const {
  std::ifstream in(path_of(key));
  if (!in) return std::nullopt;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("key") ||
      j["key"] != key || !j.contains("value"))
    return std::nullopt;
  return j["value"];
}

void Cache::put(const std::string& key, const nlohmann::json& value) const {
  nlohmann::json j;
  j["key"] = key;
  j["value"] = value;
  std::string final = path_of(key), tmp = final + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, final, ec);
}

}  // namespace qfock
