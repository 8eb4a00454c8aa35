#include "freeminor/decomposition.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "freeminor/connectivity.hpp"

namespace fm {

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Polygon: return "polygon";
    case ComponentKind::Bond: return "bond";
    case ComponentKind::Proper3Connected: return "3-connected";
  }
  return "?";
}

int MultiGraphComponent::virtual_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const ComponentEdge& e) { return e.is_virtual; }));
}

Graph MultiGraphComponent::simple_graph() const {
  Graph g(n);
  for (const ComponentEdge& e : edges) g.connect(e.u, e.v);
  return g;
}

namespace {

// Decomposition node while splitting; vertices are ids of the input graph.
using Piece = std::vector<ComponentEdge>;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

VertexSet vertices_of(const Piece& piece) {
  VertexSet vs = 0;
  for (const ComponentEdge& e : piece) vs |= bit(e.u) | bit(e.v);
  return vs;
}

// Separation classes of {a, b}: edges are equivalent when joined by a path
// avoiding a and b internally. Returns a class to split off, or empty when
// {a, b} admits no split with at least two edges on each side.
std::vector<std::size_t> split_class(const Piece& piece, int a, int b) {
  const int m = static_cast<int>(piece.size());
  UnionFind uf(m);
  std::array<int, Graph::kMaxVertices> first_edge;
  first_edge.fill(-1);
  for (int i = 0; i < m; ++i) {
    for (int w : {piece[i].u, piece[i].v}) {
      if (w == a || w == b) continue;
      if (first_edge[w] < 0) {
        first_edge[w] = i;
      } else {
        uf.unite(i, first_edge[w]);
      }
    }
  }
  std::map<int, std::vector<std::size_t>> classes;
  for (int i = 0; i < m; ++i) classes[uf.find(i)].push_back(static_cast<std::size_t>(i));
  if (classes.size() < 2) return {};
  for (auto& [root, members] : classes) {
    if (members.size() >= 2 && m - static_cast<int>(members.size()) >= 2) return members;
  }
  return {};
}

class Splitter {
 public:
  std::vector<Piece> finals;

  void run(Piece piece) {
    const VertexSet vs = vertices_of(piece);
    if (std::popcount(vs) > 2) {
      std::vector<int> verts;
      for_each_vertex(vs, [&](int v) { verts.push_back(v); });
      for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
          auto chosen = split_class(piece, verts[i], verts[j]);
          if (chosen.empty()) continue;
          const int id = next_pair_++;
          Piece left, right;
          std::vector<bool> in_left(piece.size(), false);
          for (std::size_t k : chosen) in_left[k] = true;
          for (std::size_t k = 0; k < piece.size(); ++k) (in_left[k] ? left : right).push_back(piece[k]);
          left.push_back({verts[i], verts[j], true, id});
          right.push_back({verts[i], verts[j], true, id});
          run(std::move(left));
          run(std::move(right));
          return;
        }
      }
    }
    finals.push_back(std::move(piece));
  }

 private:
  int next_pair_ = 0;
};

ComponentKind classify_piece(const Piece& piece) {
  const VertexSet vs = vertices_of(piece);
  if (std::popcount(vs) == 2) return ComponentKind::Bond;
  bool cycle = true;
  for_each_vertex(vs, [&](int v) {
    int deg = 0;
    for (const ComponentEdge& e : piece) deg += (e.u == v) + (e.v == v);
    if (deg != 2) cycle = false;
  });
  if (cycle && static_cast<int>(piece.size()) == std::popcount(vs)) return ComponentKind::Polygon;
  return ComponentKind::Proper3Connected;
}

// Merge adjacent bonds with bonds and polygons with polygons.
std::vector<Piece> merge_same_kind(std::vector<Piece> pieces) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < pieces.size() && !merged; ++i) {
      const ComponentKind ki = classify_piece(pieces[i]);
      if (ki == ComponentKind::Proper3Connected) continue;
      for (const ComponentEdge& e : pieces[i]) {
        if (!e.is_virtual) continue;
        for (std::size_t j = 0; j < pieces.size() && !merged; ++j) {
          if (j == i || classify_piece(pieces[j]) != ki) continue;
          auto it = std::find_if(pieces[j].begin(), pieces[j].end(),
                                 [&](const ComponentEdge& f) { return f.is_virtual && f.pair_id == e.pair_id; });
          if (it == pieces[j].end()) continue;
          const int id = e.pair_id;
          Piece joined;
          for (const ComponentEdge& f : pieces[i])
            if (!(f.is_virtual && f.pair_id == id)) joined.push_back(f);
          for (const ComponentEdge& f : pieces[j])
            if (!(f.is_virtual && f.pair_id == id)) joined.push_back(f);
          pieces[i] = std::move(joined);
          pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
        if (merged) break;
      }
    }
  }
  return pieces;
}

}  // namespace

ComponentTree decompose_3connected(const Graph& g) {
  if (!is_2_connected(g)) throw GraphError("decompose_3connected: graph must be 2-connected with at least 3 vertices");
  Piece all;
  for (const Edge& e : g.edges()) all.push_back({e.u, e.v, false, -1});
  Splitter splitter;
  splitter.run(std::move(all));
  std::vector<Piece> pieces = merge_same_kind(std::move(splitter.finals));

  ComponentTree tree;
  std::map<int, std::vector<EdgeRef>> by_pair;
  for (const Piece& piece : pieces) {
    MultiGraphComponent c;
    c.kind = classify_piece(piece);
    std::array<int, Graph::kMaxVertices> local;
    local.fill(-1);
    for_each_vertex(vertices_of(piece), [&](int v) {
      local[v] = c.n++;
      c.original.push_back(v);
    });
    for (const ComponentEdge& e : piece) {
      c.edges.push_back({local[e.u], local[e.v], e.is_virtual, e.pair_id});
      if (e.is_virtual) by_pair[e.pair_id].emplace_back(static_cast<int>(tree.components.size()), static_cast<int>(c.edges.size()) - 1);
    }
    tree.components.push_back(std::move(c));
  }
  for (const auto& [id, refs] : by_pair) {
    if (refs.size() != 2) throw GraphError("decompose_3connected: internal pairing error");
    tree.pairing[refs[0]] = refs[1];
    tree.pairing[refs[1]] = refs[0];
  }
  return tree;
}

Graph glue_components(const ComponentTree& tree) {
  std::vector<int> offset;
  int total = 0;
  for (const auto& c : tree.components) {
    offset.push_back(total);
    total += c.n;
  }
  UnionFind uf(total);
  for (const auto& [from, to] : tree.pairing) {
    const ComponentEdge& a = tree.components[from.first].edges[from.second];
    const ComponentEdge& b = tree.components[to.first].edges[to.second];
    uf.unite(offset[from.first] + a.u, offset[to.first] + b.u);
    uf.unite(offset[from.first] + a.v, offset[to.first] + b.v);
  }
  std::map<int, int> index;
  for (int x = 0; x < total; ++x) index.emplace(uf.find(x), 0);
  int k = 0;
  for (auto& [root, id] : index) id = k++;
  Graph out(k);
  for (std::size_t ci = 0; ci < tree.components.size(); ++ci) {
    for (const ComponentEdge& e : tree.components[ci].edges) {
      if (e.is_virtual) continue;
      out.connect(index[uf.find(offset[ci] + e.u)], index[uf.find(offset[ci] + e.v)]);
    }
  }
  return out;
}

std::string ComponentTree::report() const {
  std::ostringstream os;
  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    const auto& c = components[ci];
    os << "component " << ci << ' ' << to_string(c.kind) << " n=" << c.n << " vertices=[";
    for (int v = 0; v < c.n; ++v) os << (v ? " " : "") << c.original[v];
    os << "]\n";
    for (std::size_t ei = 0; ei < c.edges.size(); ++ei) {
      const auto& e = c.edges[ei];
      os << "  " << e.u << ' ' << e.v;
      if (e.is_virtual) {
        auto partner = pairing.at({static_cast<int>(ci), static_cast<int>(ei)});
        os << " v -> component " << partner.first;
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace fm
