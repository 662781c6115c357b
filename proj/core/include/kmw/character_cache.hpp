#pragma once

#include "kmw/characters.hpp"

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace kmw {

struct CacheOptions {
  /// Directory for on-disk records; nullopt keeps the cache in memory only.
  std::optional<std::filesystem::path> directory;
  bool read_only = false;
  /// Recompute on every disk hit and require a byte-identical record.
  bool verify_hits = false;
};

struct CacheStats {
  std::size_t memory_hits = 0;
  std::size_t disk_hits = 0;
  std::size_t computed = 0;
};

/// Thread-safe store of truncated characters keyed by (type, lambda, depth).
/// Disk writes go to a temporary file that is renamed into place.
class CharacterCache {
 public:
  explicit CharacterCache(CacheOptions options = {});

  std::shared_ptr<const TruncatedCharacter> get(const Weight& lam, int depth);

  CacheStats stats() const;
  const CacheOptions& options() const { return options_; }

  /// KMW_CACHE_DIR, else $XDG_CACHE_HOME/kmw, else $HOME/.cache/kmw.
  static std::filesystem::path default_directory();
  /// Record path for a normalized highest weight; only meaningful with a directory.
  std::filesystem::path record_path(const Weight& lam, int depth) const;

 private:
  std::shared_ptr<const TruncatedCharacter> load_or_compute(const Weight& normalized, int depth);
  void write_record(const std::filesystem::path& path, const std::string& bytes) const;

  CacheOptions options_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const TruncatedCharacter>> memory_;
  std::atomic<std::size_t> memory_hits_{0};
  std::atomic<std::size_t> disk_hits_{0};
  std::atomic<std::size_t> computed_{0};
};

}  // namespace kmw
