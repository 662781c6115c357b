#include "kmw/character_cache.hpp"

#include "kmw/error.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace kmw {

namespace fs = std::filesystem;

CharacterCache::CharacterCache(CacheOptions options) : options_(std::move(options)) {}

fs::path CharacterCache::default_directory() {
  if (const char* env = std::getenv("KMW_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "kmw";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "kmw";
  return fs::temp_directory_path() / "kmw-cache";
}

namespace {

std::string memory_key(const Weight& normalized, int depth) {
  return normalized.cartan().label() + "|" + to_string(normalized) + "|" + std::to_string(depth);
}

}  // namespace

fs::path CharacterCache::record_path(const Weight& lam, int depth) const {
  std::string name = lam.cartan().label() + "_";
  for (int i = 0; i < lam.size(); ++i) {
    if (i) name += '_';
    name += to_string(lam[i]);
  }
  name += "_D" + std::to_string(depth) + ".chr";
  return options_.directory.value_or(fs::path(".")) / name;
}

CacheStats CharacterCache::stats() const { return {memory_hits_.load(), disk_hits_.load(), computed_.load()}; }

std::shared_ptr<const TruncatedCharacter> CharacterCache::get(const Weight& lam, int depth) {
  const Weight normalized = lam.normalized();
  const std::string key = memory_key(normalized, depth);
  std::shared_ptr<const TruncatedCharacter> found;
  {
    std::lock_guard lock(mutex_);
    if (auto it = memory_.find(key); it != memory_.end()) found = it->second;
  }
  if (found) {
    ++memory_hits_;
  } else {
    found = load_or_compute(normalized, depth);
    std::lock_guard lock(mutex_);
    found = memory_.emplace(key, found).first->second;
  }
  if (lam.d_pairing() == 0) return found;
  return std::make_shared<const TruncatedCharacter>(found->rebased(lam));
}

std::shared_ptr<const TruncatedCharacter> CharacterCache::load_or_compute(const Weight& normalized, int depth) {
  if (options_.directory) {
    const auto path = record_path(normalized, depth);
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      const std::string bytes = buf.str();
      auto chr = std::make_shared<const TruncatedCharacter>(
          TruncatedCharacter::deserialize(normalized.data(), bytes));
      if (chr->highest_weight() != normalized || chr->depth() != depth) {
        throw Error(ErrorCode::Cache, "cache record " + path.string() + " does not match its key");
      }
      if (options_.verify_hits) {
        const auto fresh = freudenthal(normalized, depth).serialize();
        if (fresh != bytes) {
          throw Error(ErrorCode::Cache, "cache record " + path.string() + " differs from recomputation");
        }
      }
      ++disk_hits_;
      return chr;
    }
  }
  auto chr = std::make_shared<const TruncatedCharacter>(freudenthal(normalized, depth));
  ++computed_;
  if (options_.directory && !options_.read_only) {
    write_record(record_path(normalized, depth), chr->serialize());
  }
  return chr;
}

void CharacterCache::write_record(const fs::path& path, const std::string& bytes) const {
  static std::atomic<unsigned long> counter{0};
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorCode::Cache, "cannot create cache directory " + path.parent_path().string());
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << ::getpid() << '.'
           << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter++;
  const fs::path tmp = path.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Cache, "cannot write cache file " + tmp.string());
    out << bytes;
    if (!out.flush()) throw Error(ErrorCode::Cache, "short write to " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::Cache, "cannot publish cache file " + path.string());
  }
}

}  // namespace kmw
