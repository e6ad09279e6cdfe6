#include "mingens/cache.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mingens/version.hpp"

namespace mingens {

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << x;
  return os.str();
}

namespace {

std::string code_version() { return std::string(kVersion) + "+" + kGitHash; }

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '=') ? c : '_';
  return out;
}

std::uint64_t payload_checksum(const std::vector<std::string>& lines) {
  std::uint64_t h = fnv1a("");
  for (const auto& l : lines) {
    h = fnv1a(l, h);
    h = fnv1a("\n", h);
  }
  return h;
}

}  // namespace

std::string CacheKey::file_name() const {
  std::string name = sanitize(computation) + "_n" + std::to_string(n);
  if (!settings.empty()) name += "_" + sanitize(settings);
  return name + ".txt";
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::default_dir(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv("MINGENS_CACHE_DIR"); env && *env) return env;
  return fallback;
}

std::optional<std::vector<std::string>> ResultCache::load(const CacheKey& key) {
  std::ifstream in(dir_ / key.file_name());
  auto miss = [&]() -> std::optional<std::vector<std::string>> {
    ++misses_;
    return std::nullopt;
  };
  if (!in) return miss();
  std::string magic, version, count_line, checksum_line;
  if (!std::getline(in, magic) || magic != "mingens-cache 1") return miss();
  if (!std::getline(in, version) || version != "version " + code_version()) return miss();
  if (!std::getline(in, count_line) || count_line.rfind("count ", 0) != 0) return miss();
  if (!std::getline(in, checksum_line) || checksum_line.rfind("checksum ", 0) != 0) return miss();
  std::size_t count = 0;
  try {
    count = std::stoull(count_line.substr(6));
  } catch (const std::exception&) {
    return miss();
  }
  std::vector<std::string> lines;
  std::string l;
  while (std::getline(in, l)) lines.push_back(l);
  if (lines.size() != count || hex64(payload_checksum(lines)) != checksum_line.substr(9)) return miss();
  ++hits_;
  return lines;
}

void ResultCache::store(const CacheKey& key, const std::vector<std::string>& lines) {
  std::filesystem::create_directories(dir_);
  const auto final_path = dir_ / key.file_name();
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << "mingens-cache 1\n"
        << "version " << code_version() << '\n'
        << "count " << lines.size() << '\n'
        << "checksum " << hex64(payload_checksum(lines)) << '\n';
    for (const auto& line : lines) out << line << '\n';
  }
  std::filesystem::rename(tmp, final_path);
}

RunManifest::RunManifest(std::string command, std::map<std::string, std::string> parameters)
    : command_(std::move(command)), parameters_(std::move(parameters)), started_(std::chrono::system_clock::now()) {}

void RunManifest::finish(const nlohmann::json& result, std::size_t cache_hits) {
  finished_ = std::chrono::system_clock::now();
  cache_hits_ = cache_hits;
  nlohmann::json basis = {{"command", command_}, {"parameters", parameters_}, {"version", code_version()},
                          {"result", result}};
  digest_ = hex64(fnv1a(basis.dump()));
}

nlohmann::json RunManifest::to_json() const {
  auto ms = [](auto tp) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(tp.time_since_epoch()).count();
  };
  return {{"command", command_},       {"parameters", parameters_}, {"started_ms", ms(started_)},
          {"finished_ms", ms(finished_)}, {"cache_hits", cache_hits_}, {"version", code_version()},
          {"digest", digest_}};
}

}  // namespace mingens
