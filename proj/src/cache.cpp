#include "freeminor/cache.hpp"

#include <stdexcept>

namespace fm {

namespace {

std::string header_line(std::string_view version) { return "#" + std::string(version); }

}  // namespace

VerdictCache::VerdictCache(const std::filesystem::path& dir, std::string_view version) : path_(dir / kFileName) {
  std::filesystem::create_directories(dir);
  const std::string header = header_line(version);
  bool fresh = true;
  if (std::ifstream in(path_); in) {
    std::string line;
    if (std::getline(in, line) && line == header) {
      fresh = false;
      while (std::getline(in, line)) {
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string::npos) continue;  // torn or foreign line
        table_[{line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1)}] = line.substr(t2 + 1);
      }
    } else {
      stale_ = !line.empty();
    }
  }
  out_.open(path_, fresh ? std::ios::out | std::ios::trunc : std::ios::out | std::ios::app);
  if (!out_) throw std::runtime_error("cannot open cache file " + path_.string());
  if (fresh) out_ << header << '\n' << std::flush;
}

std::optional<std::string> VerdictCache::lookup(const std::string& kind, const std::string& key) const {
  std::lock_guard lock(mu_);
  auto it = table_.find({kind, key});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void VerdictCache::store(const std::string& kind, const std::string& key, const std::string& value) {
  if (kind.find_first_of("\t\n") != std::string::npos || key.find_first_of("\t\n") != std::string::npos ||
      value.find('\n') != std::string::npos)
    throw std::invalid_argument("VerdictCache::store: field contains a separator");
  std::lock_guard lock(mu_);
  auto [it, inserted] = table_.try_emplace({kind, key}, value);
  if (!inserted) return;
  out_ << kind << '\t' << key << '\t' << value << '\n' << std::flush;
}

std::size_t VerdictCache::size() const {
  std::lock_guard lock(mu_);
  return table_.size();
}

}  // namespace fm
