#include "freeminor/enumerate.hpp"

#include <array>
#include <mutex>

#include "freeminor/canonical.hpp"
#include "freeminor/connectivity.hpp"

namespace fm {

namespace {

std::mutex level_mutex;
std::array<std::vector<Graph>, kMaxEnumerationOrder + 1> levels;

// Every class on n vertices arises from a class on n-1 vertices by adding a
// vertex with some neighbourhood, so extending each representative by all
// 2^(n-1) neighbourhoods and deduplicating is exhaustive.
const std::vector<Graph>& level(int n) {
  if (!levels[n].empty()) return levels[n];
  if (n == 1) {
    levels[1] = {Graph(1)};
    return levels[1];
  }
  GraphSet classes;
  for (const Graph& base : level(n - 1)) {
    for (VertexSet nbhd = 0; nbhd < bit(n - 1); ++nbhd) {
      Graph g = base;
      int v = g.append_vertex();
      for_each_vertex(nbhd, [&](int w) { g.connect(v, w); });
      classes.insert(g);
    }
  }
  std::vector<Graph> out;
  for (const Graph& g : classes.members()) out.push_back(canonical_form(g));
  levels[n] = std::move(out);
  return levels[n];
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw GraphError("enumerate_graphs: n must be in [1, 8], got " + std::to_string(n));
  }
  std::vector<Graph> all;
  {
    std::lock_guard lock(level_mutex);
    all = level(n);
  }
  if (!connected_only) return all;
  std::vector<Graph> out;
  for (const Graph& g : all) {
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

std::vector<Graph> enumerate_graphs_up_to(int max_n, bool connected_only) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level_graphs = enumerate_graphs(n, connected_only);
    out.insert(out.end(), level_graphs.begin(), level_graphs.end());
  }
  return out;
}

}  // namespace fm
