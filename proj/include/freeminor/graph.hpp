#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fm {

/// Raised when an operation's precondition on its graph arguments does not hold.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

using VertexSet = std::uint32_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

/// Iterate the members of a vertex bitset in increasing order.
template <class F>
void for_each_vertex(VertexSet set, F&& f) {
  while (set != 0) {
    int v = std::countr_zero(set);
    set &= set - 1;
    f(v);
  }
}

/// Simple undirected graph on vertices 0..n-1, n <= 32. Each adjacency row is
/// one machine word.
class Graph {
 public:
  static constexpr int kMaxVertices = 32;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<Edge> edges);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const;

  bool has_edge(int u, int v) const;
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  VertexSet all_vertices() const;

  /// Sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;
  std::vector<int> degree_sequence() const;  // descending

  // In-place builders; values are treated as immutable once handed out.
  void connect(int u, int v);
  void disconnect(int u, int v);
  int append_vertex();

  /// Single line, e.g. "n=3 0-1 1-2".
  std::string to_string() const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Minor operations. Each returns a new graph and leaves the input untouched.
Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);
/// The new vertex gets index n.
Graph subdivide_edge(const Graph& g, Edge e);
/// Simple-graph contraction: parallels merge, the loop is dropped. The merged
/// vertex keeps index e.u and vertices above e.v shift down by one.
Graph contract_edge(const Graph& g, Edge e);

/// Subgraph induced by `keep`, renumbered in increasing vertex order.
Graph induced_subgraph(const Graph& g, VertexSet keep);
/// perm[old] = new.
Graph relabel(const Graph& g, std::span<const int> perm);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace fm
