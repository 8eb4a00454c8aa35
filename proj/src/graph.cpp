#include "freeminor/graph.hpp"

#include <algorithm>
#include <sstream>

namespace fm {

namespace {

// Drop bit v and shift every higher bit down by one.
VertexSet remove_bit(VertexSet row, int v) {
  const VertexSet low = bit(v) - 1;
  return (row & low) | ((row >> 1) & ~low);
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, 32]");
  }
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
  for (const Edge& e : edges) connect(e.u, e.v);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) connect(e.u, e.v);
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (adj_[u] & bit(v)) != 0;
}

VertexSet Graph::all_vertices() const {
  return n_ == kMaxVertices ? ~VertexSet{0} : bit(n_) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(adj_[u] & ~((bit(u) << 1) - 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq(n_);
  for (int v = 0; v < n_; ++v) seq[v] = degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

void Graph::connect(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::disconnect(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

int Graph::append_vertex() {
  if (n_ == kMaxVertices) throw GraphError("vertex limit 32 reached");
  adj_[n_] = 0;
  return n_++;
}

std::string Graph::to_string() const {
  std::ostringstream os;
  os << "n=" << n_;
  for (const Edge& e : edges()) os << ' ' << e.u << '-' << e.v;
  return os.str();
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw GraphError("delete_vertex: vertex out of range");
  Graph h(g.order() - 1);
  for (int u = 0, w = 0; u < g.order(); ++u) {
    if (u == v) continue;
    for_each_vertex(remove_bit(g.neighbors(u) & ~bit(v), v), [&](int x) {
      if (x > w) h.connect(w, x);
    });
    ++w;
  }
  return h;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("delete_edge: edge not present");
  Graph h = g;
  h.disconnect(e.u, e.v);
  return h;
}

Graph add_edge(const Graph& g, Edge e) {
  if (e.u == e.v) throw GraphError("add_edge: endpoints must differ");
  if (e.u < 0 || e.v >= g.order()) throw GraphError("add_edge: vertex out of range");
  if (g.has_edge(e.u, e.v)) throw GraphError("add_edge: edge already present");
  Graph h = g;
  h.connect(e.u, e.v);
  return h;
}

Graph subdivide_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("subdivide_edge: edge not present");
  Graph h = g;
  h.disconnect(e.u, e.v);
  int w = h.append_vertex();
  h.connect(e.u, w);
  h.connect(w, e.v);
  return h;
}

Graph contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("contract_edge: edge not present");
  Graph h = g;
  for_each_vertex(g.neighbors(e.v) & ~bit(e.u), [&](int x) { h.connect(e.u, x); });
  return delete_vertex(h, e.v);
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.all_vertices();
  std::array<int, Graph::kMaxVertices> index{};
  int k = 0;
  for_each_vertex(keep, [&](int v) { index[v] = k++; });
  Graph h(k);
  for_each_vertex(keep, [&](int v) {
    for_each_vertex(g.neighbors(v) & keep, [&](int w) {
      if (w > v) h.connect(index[v], index[w]);
    });
  });
  return h;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("relabel: permutation size mismatch");
  Graph h(g.order());
  for (const Edge& e : g.edges()) h.connect(perm[e.u], perm[e.v]);
  return h;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (const Edge& e : g.non_edges()) h.connect(e.u, e.v);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (const Edge& e : a.edges()) h.connect(e.u, e.v);
  for (const Edge& e : b.edges()) h.connect(e.u + a.order(), e.v + a.order());
  return h;
}

}  // namespace fm
