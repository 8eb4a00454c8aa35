#include "freeminor/free_operator.hpp"

#include "freeminor/minor.hpp"

namespace fm {

Graph split_vertex(const Graph& g, const SplitSpec& spec) {
  const int v = spec.vertex;
  if (v < 0 || v >= g.order()) throw GraphError("split_vertex: vertex out of range");
  Graph h = g;
  for_each_vertex(g.neighbors(v), [&](int w) { h.disconnect(v, w); });
  const int right = h.append_vertex();
  for (const auto& [w, side] : spec.assignment) {
    if (!g.has_edge(v, w)) throw GraphError("split_vertex: assignment names a non-neighbour");
    if (side != SplitSide::Right) h.connect(v, w);
    if (side != SplitSide::Left) h.connect(right, w);
  }
  return h;
}

std::vector<SplitSpec> all_splits(const Graph& g, int v) {
  std::vector<int> nbrs;
  for_each_vertex(g.neighbors(v), [&](int w) { nbrs.push_back(w); });
  std::size_t total = 1;
  for (std::size_t i = 0; i < nbrs.size(); ++i) total *= 3;
  std::vector<SplitSpec> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    SplitSpec spec{v, {}};
    std::size_t rest = code;
    for (int w : nbrs) {
      spec.assignment[w] = static_cast<SplitSide>(rest % 3);
      rest /= 3;
    }
    out.push_back(std::move(spec));
  }
  return out;
}

GraphSet edge_deleted_set(const GraphSet& b) {
  GraphSet out;
  for (const Graph& g : b.members()) {
    for (const Edge& e : g.edges()) out.insert(delete_edge(g, e));
  }
  return out;
}

GraphSet vertex_split_set(const GraphSet& b) {
  GraphSet out;
  for (const Graph& g : b.members()) {
    GraphSet mine;
    for (int v = 0; v < g.order(); ++v) {
      for (const SplitSpec& spec : all_splits(g, v)) mine.insert(split_vertex(g, spec));
    }
    out.merge(mine);
  }
  return out;
}

bool is_antichain(const GraphSet& b) { return minimal_minors(b).size() == b.size(); }

GraphSet free_forbidden(const GraphSet& b, FreeOperatorStages* stages) {
  const bool antichain = is_antichain(b);
  const GraphSet base = antichain ? b : minimal_minors(b);
  GraphSet deleted = edge_deleted_set(base);
  GraphSet split = vertex_split_set(base);
  GraphSet both = deleted;
  both.merge(split);
  GraphSet result = minimal_minors(both);
  if (stages) *stages = {deleted.size(), split.size(), result.size(), antichain};
  return result;
}

bool in_free_class(const Graph& g, const GraphSet& b) {
  if (!excludes_all(g, b)) return false;
  for (const Edge& e : g.non_edges()) {
    if (!excludes_all(add_edge(g, e), b)) return false;
  }
  return true;
}

}  // namespace fm
