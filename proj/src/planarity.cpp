#include "freeminor/planarity.hpp"

#include <algorithm>

#include "freeminor/catalog.hpp"
#include "freeminor/connectivity.hpp"

namespace fm {

namespace {

using Face = std::vector<int>;

VertexSet face_vertices(const Face& face) {
  VertexSet vs = 0;
  for (int v : face) vs |= bit(v);
  return vs;
}

Face find_cycle(const Graph& g) {
  std::vector<int> parent(g.order(), -1);
  std::vector<int> depth(g.order(), -1);
  Face cycle;
  auto dfs = [&](auto&& self, int v) -> bool {
    bool found = false;
    for_each_vertex(g.neighbors(v), [&](int w) {
      if (found || w == parent[v]) return;
      if (depth[w] < 0) {
        parent[w] = v;
        depth[w] = depth[v] + 1;
        found = self(self, w);
      } else if (depth[w] < depth[v]) {
        for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
        found = true;
      }
    });
    return found;
  };
  depth[0] = 0;
  dfs(dfs, 0);
  return cycle;
}

struct Fragment {
  VertexSet attachments = 0;
  VertexSet interior = 0;
  Edge edge;  // used when interior is empty
};

// Path through a fragment between two of its attachments, endpoints included.
std::vector<int> fragment_path(const Graph& g, const Fragment& frag) {
  if (frag.interior == 0) return {frag.edge.u, frag.edge.v};
  const int from = std::countr_zero(frag.attachments);
  const int to = std::countr_zero(frag.attachments & ~bit(from));
  std::vector<int> parent(g.order(), -1);
  std::vector<int> queue;
  for_each_vertex(g.neighbors(from) & frag.interior, [&](int w) {
    parent[w] = from;
    queue.push_back(w);
  });
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    if (g.has_edge(v, to)) {
      std::vector<int> path{to};
      for (int x = v; x != from; x = parent[x]) path.push_back(x);
      path.push_back(from);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for_each_vertex(g.neighbors(v) & frag.interior, [&](int w) {
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    });
  }
  return {};
}

bool planar_block(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  if (n <= 4) return true;
  if (m > 3 * n - 6) return false;

  Face cycle = find_cycle(g);
  std::vector<Face> faces{cycle, cycle};
  Graph embedded(n);
  VertexSet placed = face_vertices(cycle);
  for (std::size_t i = 0; i < cycle.size(); ++i) embedded.connect(cycle[i], cycle[(i + 1) % cycle.size()]);

  while (embedded.size() < m) {
    std::vector<Fragment> fragments;
    for (const Edge& e : g.edges()) {
      if ((placed & bit(e.u)) && (placed & bit(e.v)) && !embedded.has_edge(e.u, e.v)) {
        fragments.push_back({bit(e.u) | bit(e.v), 0, e});
      }
    }
    VertexSet rest = g.all_vertices() & ~placed;
    while (rest != 0) {
      Fragment frag;
      VertexSet frontier = bit(std::countr_zero(rest));
      while (frontier != 0) {
        frag.interior |= frontier;
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
        frag.attachments |= next & placed;
        frontier = next & rest & ~frag.interior;
      }
      rest &= ~frag.interior;
      fragments.push_back(frag);
    }

    int chosen = -1;
    int chosen_face = -1;
    for (std::size_t i = 0; i < fragments.size(); ++i) {
      int admissible = 0;
      int first = -1;
      for (std::size_t f = 0; f < faces.size(); ++f) {
        if ((fragments[i].attachments & ~face_vertices(faces[f])) == 0) {
          if (admissible++ == 0) first = static_cast<int>(f);
        }
      }
      if (admissible == 0) return false;
      if (admissible == 1 || chosen < 0) {
        chosen = static_cast<int>(i);
        chosen_face = first;
        if (admissible == 1) break;
      }
    }

    const std::vector<int> path = fragment_path(g, fragments[chosen]);
    const Face face = faces[chosen_face];
    const int len = static_cast<int>(face.size());
    const int i = static_cast<int>(std::find(face.begin(), face.end(), path.front()) - face.begin());
    const int j = static_cast<int>(std::find(face.begin(), face.end(), path.back()) - face.begin());
    Face first, second;
    for (int k = i;; k = (k + 1) % len) {
      first.push_back(face[k]);
      if (k == j) break;
    }
    for (int k = static_cast<int>(path.size()) - 2; k >= 1; --k) first.push_back(path[k]);
    for (int k = j;; k = (k + 1) % len) {
      second.push_back(face[k]);
      if (k == i) break;
    }
    for (std::size_t k = 1; k + 1 < path.size(); ++k) second.push_back(path[k]);
    faces[chosen_face] = std::move(first);
    faces.push_back(std::move(second));
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      embedded.connect(path[k], path[k + 1]);
      placed |= bit(path[k]) | bit(path[k + 1]);
    }
  }
  return true;
}

}  // namespace

bool is_planar_minor(const Graph& g) { return !has_minor(g, k5()) && !has_minor(g, k33()); }

bool is_planar_fast(const Graph& g) {
  const int n = g.order();
  if (n <= 4) return true;
  if (g.size() > 3 * n - 6) return false;
  for (VertexSet block : decompose_blocks(g).blocks) {
    if (!planar_block(induced_subgraph(g, block))) return false;
  }
  return true;
}

std::optional<MinorModel> kuratowski_certificate(const Graph& g) {
  if (auto model = find_minor_model(g, k5())) return model;
  return find_minor_model(g, k33());
}

bool is_outerplanar(const Graph& g) {
  static const Graph k4 = make_catalog(CatalogId::complete(4));
  static const Graph k23 = make_catalog(CatalogId::bipartite(2, 3));
  return !has_minor(g, k4) && !has_minor(g, k23);
}

}  // namespace fm
