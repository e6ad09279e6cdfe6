#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace mingens {

// 64-bit FNV-1a, stable across platforms; used for checksums and digests.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t x);

struct CacheKey {
  std::string computation;
  int n = 0;
  std::string settings;  // free-form, e.g. "filter=rowspace"
  std::string file_name() const;
};

// Directory of result files. Each file stores a header with the code
// version, the line count and a checksum of the payload; a read that fails
// any of these checks is a miss.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);
  // $MINGENS_CACHE_DIR if set, else the given fallback.
  static std::filesystem::path default_dir(const std::filesystem::path& fallback);

  std::optional<std::vector<std::string>> load(const CacheKey& key);
  void store(const CacheKey& key, const std::vector<std::string>& lines);

  const std::filesystem::path& dir() const { return dir_; }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

class RunManifest {
 public:
  RunManifest(std::string command, std::map<std::string, std::string> parameters);
  void finish(const nlohmann::json& result, std::size_t cache_hits);
  // Same inputs, code version and result give the same digest.
  const std::string& digest() const { return digest_; }
  nlohmann::json to_json() const;

 private:
  std::string command_;
  std::map<std::string, std::string> parameters_;
  std::chrono::system_clock::time_point started_, finished_;
  std::size_t cache_hits_ = 0;
  std::string digest_;
};

}  // namespace mingens
