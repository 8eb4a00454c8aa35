#include "freeminor/canonical.hpp"

#include <algorithm>

#include "freeminor/io.hpp"

namespace fm {

namespace {

// Iterated degree refinement. The resulting colours are isomorphism
// invariant: equal signatures sort to equal ranks in every labeling.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  std::vector<std::vector<int>> sig(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      sig[v].assign(1, color[v]);
      for_each_vertex(g.neighbors(v), [&](int w) { sig[v].push_back(color[w]); });
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return color;
}

class LabelingSearch {
 public:
  explicit LabelingSearch(const Graph& g)
      : g_(g), n_(g.order()), color_(refine_colors(g)), cur_(n_), best_(n_), cur_words_(n_), best_words_(n_) {
    required_ = color_;
    std::sort(required_.begin(), required_.end());
  }

  std::vector<int> run() {
    if (n_ > 0) dfs(0);
    std::vector<int> labeling(n_);
    for (int k = 0; k < n_; ++k) labeling[best_[k]] = k;
    return labeling;
  }

 private:
  // -1, 0, +1 comparing cur_words_[1..k] against best_words_[1..k].
  int compare_prefix(int k) const {
    for (int i = 1; i <= k; ++i) {
      if (cur_words_[i] != best_words_[i]) return cur_words_[i] < best_words_[i] ? -1 : 1;
    }
    return 0;
  }

  void dfs(int k) {
    if (k == n_) {
      if (!has_best_ || compare_prefix(n_ - 1) > 0) {
        best_ = cur_;
        best_words_ = cur_words_;
        has_best_ = true;
      }
      return;
    }
    VertexSet tried = 0;
    for (int v = 0; v < n_; ++v) {
      if ((placed_ & bit(v)) || color_[v] != required_[k]) continue;
      bool twin_of_tried = false;
      for_each_vertex(tried, [&](int t) {
        if ((g_.neighbors(v) & ~bit(t)) == (g_.neighbors(t) & ~bit(v))) twin_of_tried = true;
      });
      if (twin_of_tried) continue;
      tried |= bit(v);

      std::uint32_t word = 0;
      for (int j = 0; j < k; ++j) word = (word << 1) | (g_.has_edge(cur_[j], v) ? 1u : 0u);
      cur_[k] = v;
      cur_words_[k] = word;
      if (has_best_ && compare_prefix(k) < 0) continue;
      placed_ |= bit(v);
      dfs(k + 1);
      placed_ &= ~bit(v);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> required_;
  std::vector<int> cur_, best_;
  std::vector<std::uint32_t> cur_words_, best_words_;
  VertexSet placed_ = 0;
  bool has_best_ = false;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) { return LabelingSearch(g).run(); }

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

std::string canonical_key(const Graph& g) { return write_graph6(canonical_form(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

GraphSet::GraphSet(std::initializer_list<Graph> graphs) {
  for (const Graph& g : graphs) insert(g);
}

bool GraphSet::insert(const Graph& g) { return members_.emplace(canonical_key(g), g).second; }

void GraphSet::merge(const GraphSet& other) {
  for (const auto& [key, g] : other.members_) members_.emplace(key, g);
}

bool GraphSet::contains(const Graph& g) const { return members_.count(canonical_key(g)) != 0; }

std::vector<Graph> GraphSet::members() const {
  std::vector<Graph> out;
  out.reserve(members_.size());
  for (const auto& [key, g] : members_) out.push_back(g);
  return out;
}

std::vector<std::string> GraphSet::keys() const {
  std::vector<std::string> out;
  for (const auto& [key, g] : members_) out.push_back(key);
  return out;
}

bool GraphSet::operator==(const GraphSet& other) const { return keys() == other.keys(); }

}  // namespace fm
