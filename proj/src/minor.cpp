#include "freeminor/minor.hpp"

#include <algorithm>
#include <sstream>

#include "freeminor/connectivity.hpp"

namespace fm {

std::string MinorModel::to_text() const {
  std::ostringstream os;
  for (std::size_t p = 0; p < branch_sets.size(); ++p) {
    os << p << ": {";
    bool first = true;
    for_each_vertex(branch_sets[p], [&](int v) {
      os << (first ? "" : " ") << v;
      first = false;
    });
    os << "}\n";
  }
  return os.str();
}

std::string MinorModel::to_compact() const {
  std::ostringstream os;
  for (std::size_t p = 0; p < branch_sets.size(); ++p) {
    os << (p ? ";" : "") << p << ":{";
    bool first = true;
    for_each_vertex(branch_sets[p], [&](int v) {
      os << (first ? "" : " ") << v;
      first = false;
    });
    os << "}";
  }
  return os.str();
}

std::optional<bool> MinorCache::lookup(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void MinorCache::store(const std::string& key, bool value) {
  if (!enabled_) return;
  if (table_.size() >= capacity_) {
    table_.clear();
    ++resets_;
  }
  table_.emplace(key, value);
}

MinorCache& default_minor_cache() {
  thread_local MinorCache cache;
  return cache;
}

std::optional<std::vector<int>> find_spanning_embedding(const Graph& host, const Graph& pattern) {
  const int n = pattern.order();
  if (host.order() != n || host.size() < pattern.size()) return std::nullopt;

  // Place pattern vertices so that each one after the first of its component
  // already has a placed neighbour; highest degree first within that.
  std::vector<int> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < n) {
    int pick = -1;
    bool pick_touches = false;
    for (int p = 0; p < n; ++p) {
      if (placed & bit(p)) continue;
      bool touches = (pattern.neighbors(p) & placed) != 0;
      if (pick < 0 || (touches && !pick_touches) ||
          (touches == pick_touches && pattern.degree(p) > pattern.degree(pick))) {
        pick = p;
        pick_touches = touches;
      }
    }
    order.push_back(pick);
    placed |= bit(pick);
  }

  std::vector<int> image(n, -1);
  VertexSet used = 0;
  auto extend = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int p = order[depth];
    VertexSet required = 0;  // host vertices that must be adjacent to image[p]
    for_each_vertex(pattern.neighbors(p), [&](int q) {
      if (image[q] >= 0) required |= bit(image[q]);
    });
    for (int h = 0; h < n; ++h) {
      if ((used & bit(h)) || host.degree(h) < pattern.degree(p)) continue;
      if ((host.neighbors(h) & required) != required) continue;
      image[p] = h;
      used |= bit(h);
      if (self(self, depth + 1)) return true;
      used &= ~bit(h);
      image[p] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

namespace {

struct PatternInfo {
  const Graph& graph;
  std::string key;
  int order;
  int size;
  int min_degree;
  bool connected;
  bool biconnected;

  explicit PatternInfo(const Graph& p)
      : graph(p),
        key(canonical_key(p)),
        order(p.order()),
        size(p.size()),
        min_degree(p.order() == 0 ? 0 : 32),
        connected(is_connected(p)),
        biconnected(is_2_connected(p)) {
    for (int v = 0; v < p.order(); ++v) min_degree = std::min(min_degree, p.degree(v));
  }
};

// Host reductions that preserve containment of the pattern.
//  - min degree >= 1: isolated host vertices are never needed.
//  - min degree >= 2: a leaf is either unused or inside a larger branch set
//    through its only edge, so deleting it loses nothing.
//  - min degree >= 3: a degree-2 vertex cannot be a branch set on its own, so
//    contracting one of its edges (equivalently H - v + uw) loses nothing.
Graph reduce_host(Graph h, int pattern_min_degree) {
  if (pattern_min_degree < 1) return h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < h.order(); ++v) {
      const int d = h.degree(v);
      if (d == 0 || (d == 1 && pattern_min_degree >= 2)) {
        h = delete_vertex(h, v);
        changed = true;
        break;
      }
      if (d == 2 && pattern_min_degree >= 3) {
        const int u = std::countr_zero(h.neighbors(v));
        h = contract_edge(h, Edge(u, v));
        changed = true;
        break;
      }
    }
  }
  return h;
}

class MinorSearch {
 public:
  MinorSearch(const Graph& pattern, MinorCache& cache) : info_(pattern), cache_(cache) {}

  bool contains(const Graph& host) { return solve(host); }

 private:
  bool solve(const Graph& raw) {
    if (info_.order == 0) return true;
    if (raw.order() < info_.order || raw.size() < info_.size) return false;
    Graph h = reduce_host(raw, info_.min_degree);
    if (h.order() < info_.order || h.size() < info_.size) return false;

    if (info_.biconnected) {
      auto blocks = decompose_blocks(h).blocks;
      if (blocks.size() != 1 || blocks[0] != h.all_vertices()) {
        for (VertexSet block : blocks) {
          if (std::popcount(block) >= info_.order && solve(induced_subgraph(h, block))) return true;
        }
        return false;
      }
    } else if (info_.connected) {
      auto parts = connected_components(h);
      if (parts.size() > 1) {
        for (VertexSet part : parts) {
          if (std::popcount(part) >= info_.order && solve(induced_subgraph(h, part))) return true;
        }
        return false;
      }
    }

    const std::string key = info_.key + '|' + canonical_key(h);
    if (auto hit = cache_.lookup(key)) return *hit;

    bool found;
    if (h.order() == info_.order) {
      found = find_spanning_embedding(h, info_.graph).has_value();
    } else {
      found = false;
      for (const Edge& e : h.edges()) {
        if (solve(contract_edge(h, e))) {
          found = true;
          break;
        }
      }
      for (int v = 0; !found && v < h.order(); ++v) found = solve(delete_vertex(h, v));
    }
    cache_.store(key, found);
    return found;
  }

  PatternInfo info_;
  MinorCache& cache_;
};

}  // namespace

bool has_minor(const Graph& host, const Graph& pattern, MinorCache& cache) {
  return MinorSearch(pattern, cache).contains(host);
}

bool has_minor(const Graph& host, const Graph& pattern) { return has_minor(host, pattern, default_minor_cache()); }

std::optional<MinorModel> find_minor_model(const Graph& host, const Graph& pattern) {
  MinorCache& cache = default_minor_cache();
  MinorSearch search(pattern, cache);
  if (!search.contains(host)) return std::nullopt;

  // Self-reduction: commit any deletion or contraction that keeps the
  // pattern, tracking which original vertices each current vertex absorbed.
  Graph h = host;
  std::vector<VertexSet> absorbed(host.order());
  for (int v = 0; v < host.order(); ++v) absorbed[v] = bit(v);
  while (h.order() > pattern.order()) {
    bool progressed = false;
    for (const Edge& e : h.edges()) {
      Graph next = contract_edge(h, e);
      if (!search.contains(next)) continue;
      absorbed[e.u] |= absorbed[e.v];
      absorbed.erase(absorbed.begin() + e.v);
      h = next;
      progressed = true;
      break;
    }
    if (progressed) continue;
    for (int v = 0; v < h.order(); ++v) {
      Graph next = delete_vertex(h, v);
      if (!search.contains(next)) continue;
      absorbed.erase(absorbed.begin() + v);
      h = next;
      progressed = true;
      break;
    }
    if (!progressed) return std::nullopt;  // unreachable while the search is sound
  }
  auto embedding = find_spanning_embedding(h, pattern);
  if (!embedding) return std::nullopt;
  MinorModel model{pattern, host, std::vector<VertexSet>(pattern.order())};
  for (int p = 0; p < pattern.order(); ++p) model.branch_sets[p] = absorbed[(*embedding)[p]];
  return model;
}

bool verify_minor_model(const MinorModel& model) {
  const Graph& host = model.host;
  const Graph& pattern = model.pattern;
  if (static_cast<int>(model.branch_sets.size()) != pattern.order()) return false;
  VertexSet seen = 0;
  for (VertexSet set : model.branch_sets) {
    if (set == 0 || (set & ~host.all_vertices()) != 0 || (set & seen) != 0) return false;
    seen |= set;
    if (!is_connected_within(host, set)) return false;
  }
  for (const Edge& e : pattern.edges()) {
    bool joined = false;
    for_each_vertex(model.branch_sets[e.u], [&](int v) {
      if (host.neighbors(v) & model.branch_sets[e.v]) joined = true;
    });
    if (!joined) return false;
  }
  return true;
}

GraphSet minimal_minors(const GraphSet& b) {
  const auto members = b.members();
  GraphSet out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < members.size() && minimal; ++j) {
      if (i != j && has_minor(members[i], members[j])) minimal = false;
    }
    if (minimal) out.insert(members[i]);
  }
  return out;
}

bool excludes_all(const Graph& g, const GraphSet& b) {
  for (const Graph& h : b.members()) {
    if (has_minor(g, h)) return false;
  }
  return true;
}

}  // namespace fm
