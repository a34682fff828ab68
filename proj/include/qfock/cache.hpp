#pragma once
// Content-addressed JSON cache on disk.
//
// Entries are keyed by a full description string; the file name is a hash of
// the key and the stored object repeats the key, so collisions and stale or
// corrupt files are detected and silently recomputed.  Writes go through a
// temp file and rename.

#include <optional>
#include <string>

#include "json.hpp"

namespace qfock {

class Cache {
 public:
  explicit Cache(std::string dir);
  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& value) const;

 private:
  std::string path_of(const std::string& key) const;
  std::string dir_;
};

}  // namespace qfock
