#include "freeminor/connectivity.hpp"

#include <algorithm>
#include <utility>

namespace fm {

namespace {

VertexSet reach(const Graph& g, int start, VertexSet within) {
  VertexSet seen = bit(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v) & within; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

// Edge-stack DFS for biconnected components.
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g) : g_(g), disc_(g.order(), -1), low_(g.order(), 0) {}

  BlockDecomposition run() {
    for (int v = 0; v < g_.order(); ++v) {
      if (disc_[v] < 0) dfs(v, -1);
    }
    return std::move(out_);
  }

 private:
  void dfs(int v, int parent) {
    disc_[v] = low_[v] = time_++;
    for_each_vertex(g_.neighbors(v), [&](int w) {
      if (w == parent) return;
      if (disc_[w] < 0) {
        stack_.emplace_back(v, w);
        dfs(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) pop_block(Edge(v, w));
      } else if (disc_[w] < disc_[v]) {
        stack_.emplace_back(v, w);
        low_[v] = std::min(low_[v], disc_[w]);
      }
    });
  }

  void pop_block(Edge until) {
    VertexSet members = 0;
    int edges = 0;
    while (true) {
      Edge e = stack_.back();
      stack_.pop_back();
      members |= bit(e.u) | bit(e.v);
      ++edges;
      if (e == until) break;
    }
    if (edges == 1) {
      out_.bridges.push_back(until);
    } else {
      out_.blocks.push_back(members);
    }
  }

  const Graph& g_;
  std::vector<int> disc_, low_;
  int time_ = 0;
  std::vector<Edge> stack_;
  BlockDecomposition out_;
};

}  // namespace

bool is_connected_within(const Graph& g, VertexSet within) {
  within &= g.all_vertices();
  if (within == 0) return true;
  return reach(g, std::countr_zero(within), within) == within;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.all_vertices()); }

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.all_vertices();
  while (left != 0) {
    VertexSet comp = reach(g, std::countr_zero(left), left);
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

VertexSet cut_vertices(const Graph& g) {
  VertexSet cuts = 0;
  const auto base = connected_components(g).size();
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) continue;
    VertexSet rest = g.all_vertices() & ~bit(v);
    std::size_t pieces = 0;
    while (rest != 0) {
      rest &= ~reach(g, std::countr_zero(rest), rest);
      ++pieces;
    }
    // Removing a non-isolated vertex never removes a component.
    if (pieces > base) cuts |= bit(v);
  }
  return cuts;
}

bool is_2_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g) == 0;
}

bool is_3_connected(const Graph& g) {
  const int n = g.order();
  if (n < 4 || !is_2_connected(g)) return false;
  const VertexSet all = g.all_vertices();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!is_connected_within(g, all & ~bit(a) & ~bit(b))) return false;
    }
  }
  return true;
}

bool is_properly_3_connected(const Graph& g) { return is_3_connected(g); }

BlockDecomposition decompose_blocks(const Graph& g) {
  BlockDecomposition out = BlockFinder(g).run();
  std::sort(out.blocks.begin(), out.blocks.end());
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

}  // namespace fm
