#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "freeminor/canonical.hpp"
#include "freeminor/graph.hpp"

namespace fm {

/// Certificate that `pattern` is a minor of `host`: branch_sets[p] is the
/// host vertex set contracted onto pattern vertex p.
struct MinorModel {
  Graph pattern;
  Graph host;
  std::vector<VertexSet> branch_sets;

  /// One line per pattern vertex: "p: {h1 h2 ...}".
  std::string to_text() const;
  /// Single-line form "0:{1 2};1:{3};..." used inside verdict records.
  std::string to_compact() const;
};

/// Memo of minor-test results keyed on canonical forms of host and pattern.
/// Whole-cache reset when the entry cap is exceeded. Not thread-safe; use
/// one per worker (the default cache is thread_local).
class MinorCache {
 public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 20;

  explicit MinorCache(std::size_t capacity = kDefaultCapacity) : capacity_(capacity) {}

  std::optional<bool> lookup(const std::string& key) const;
  void store(const std::string& key, bool value);
  void clear() { table_.clear(); }

  void set_enabled(bool enabled) { enabled_ = enabled; }
  bool enabled() const { return enabled_; }
  std::size_t size() const { return table_.size(); }
  std::size_t resets() const { return resets_; }

 private:
  std::size_t capacity_;
  bool enabled_ = true;
  std::size_t resets_ = 0;
  std::unordered_map<std::string, bool> table_;
};

MinorCache& default_minor_cache();

/// Exponential in the worst case; comfortable up to ~12 host vertices.
bool has_minor(const Graph& host, const Graph& pattern);
bool has_minor(const Graph& host, const Graph& pattern, MinorCache& cache);

/// A verified model, present iff has_minor(host, pattern).
std::optional<MinorModel> find_minor_model(const Graph& host, const Graph& pattern);

/// Independent checker: branch sets nonempty, disjoint and connected, and
/// every pattern edge joined by some host edge.
bool verify_minor_model(const MinorModel& model);

/// Members of b having no other member of b as a minor.
GraphSet minimal_minors(const GraphSet& b);

/// Membership in the class of graphs excluding every member of b as a minor.
bool excludes_all(const Graph& g, const GraphSet& b);

/// Spanning-subgraph embedding of a pattern into a host with the same vertex
/// count: result[p] = host vertex. Absent when none exists.
std::optional<std::vector<int>> find_spanning_embedding(const Graph& host, const Graph& pattern);

}  // namespace fm
