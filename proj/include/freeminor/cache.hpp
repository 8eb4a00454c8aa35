#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace fm {

inline constexpr std::string_view kToolkitVersion = "freeminor 1.0.0";

/// Append-only store of (kind, canonical key) -> verdict, one tab-separated
/// record per line under a version header. A file written by another version
/// is discarded on open. Safe to share between threads.
class VerdictCache {
 public:
  static constexpr std::string_view kFileName = "verdicts.cache";

  /// Creates the directory if needed. Throws std::runtime_error when the file
  /// cannot be opened for appending.
  explicit VerdictCache(const std::filesystem::path& dir, std::string_view version = kToolkitVersion);

  std::optional<std::string> lookup(const std::string& kind, const std::string& key) const;
  void store(const std::string& kind, const std::string& key, const std::string& value);

  std::size_t size() const;
  bool loaded_stale() const { return stale_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::map<std::pair<std::string, std::string>, std::string> table_;
  std::ofstream out_;
  bool stale_ = false;
  mutable std::mutex mu_;
};

}  // namespace fm
