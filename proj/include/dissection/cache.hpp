#ifndef DISSECTION_CACHE_HPP
#define DISSECTION_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"

namespace dissection {

// Content-addressed JSON cache: one file per key, named by the FNV-1a hash
// of the key (stable across runs, unlike std::hash). The stored key is
// checked on read so hash collisions degrade to misses.
class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }

  std::optional<nlohmann::json> get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.contains("key") || j["key"] != key)
      return std::nullopt;
    return j["value"];
  }

  void put(const std::string& key, const nlohmann::json& value) const {
    if (!enabled()) return;
    std::filesystem::create_directories(dir_);
    std::ofstream out(path_for(key));
    out << nlohmann::json{{"key", key}, {"value", value}};
  }

 private:
  std::string path_for(const std::string& key) const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return (std::filesystem::path(dir_) / (std::string(buf) + ".json"))
        .string();
  }

  std::string dir_;
};

}  // namespace dissection

#endif
