#include "freeminor/catalog.hpp"

namespace fm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError("catalog: " + what);
}

}  // namespace

std::string CatalogId::name() const {
  switch (kind) {
    case Kind::Complete: return "K" + std::to_string(param);
    case Kind::Cycle: return "C" + std::to_string(param);
    case Kind::Path: return "P" + std::to_string(param);
    case Kind::CompleteBipartite: return "K" + std::to_string(param) + "," + std::to_string(param2);
    case Kind::Wheel: return "W" + std::to_string(param);
    case Kind::Prism: return "Prism";
    case Kind::Multiedge: return "M" + std::to_string(param);
    case Kind::Xi: return "Xi";
    case Kind::K5Minus: return "K5minus";
    case Kind::K33Minus: return "K33minus";
    case Kind::K5: return "K5";
    case Kind::K33: return "K33";
    case Kind::Petersen: return "Petersen";
  }
  return "?";
}

Graph make_catalog(CatalogId id) {
  using Kind = CatalogId::Kind;
  const int p = id.param;
  switch (id.kind) {
    case Kind::Complete: {
      require(p >= 0 && p <= Graph::kMaxVertices, "K(n) needs 0 <= n <= 32");
      Graph g(p);
      for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v) g.connect(u, v);
      return g;
    }
    case Kind::Cycle: {
      require(p >= 3 && p <= Graph::kMaxVertices, "C(n) needs 3 <= n <= 32");
      Graph g(p);
      for (int v = 0; v < p; ++v) g.connect(v, (v + 1) % p);
      return g;
    }
    case Kind::Path: {
      require(p >= 1 && p <= Graph::kMaxVertices, "P(n) needs 1 <= n <= 32");
      Graph g(p);
      for (int v = 0; v + 1 < p; ++v) g.connect(v, v + 1);
      return g;
    }
    case Kind::CompleteBipartite: {
      const int q = id.param2;
      require(p >= 1 && q >= 1 && p + q <= Graph::kMaxVertices, "K(a,b) needs a,b >= 1 and a+b <= 32");
      Graph g(p + q);
      for (int u = 0; u < p; ++u)
        for (int v = p; v < p + q; ++v) g.connect(u, v);
      return g;
    }
    case Kind::Wheel: {
      require(p >= 3 && p < Graph::kMaxVertices, "Wheel(k) needs 3 <= k <= 31");
      Graph g(p + 1);
      for (int v = 0; v < p; ++v) {
        g.connect(v, (v + 1) % p);
        g.connect(v, p);
      }
      return g;
    }
    case Kind::Prism:
      return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    case Kind::Multiedge: {
      require(p >= 1 && p + 1 <= Graph::kMaxVertices, "M(i) needs 1 <= i <= 31");
      Graph g(p + 1);
      g.connect(0, 1);
      for (int w = 2; w <= p; ++w) {
        g.connect(0, w);
        g.connect(w, 1);
      }
      return g;
    }
    case Kind::Xi:
      return Graph(6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {4, 5}});
    case Kind::K5Minus: {
      Graph g = make_catalog(CatalogId::complete(5));
      g.disconnect(0, 1);
      return g;
    }
    case Kind::K33Minus: {
      Graph g = make_catalog(CatalogId::bipartite(3, 3));
      g.disconnect(0, 3);
      return g;
    }
    case Kind::K5:
      return make_catalog(CatalogId::complete(5));
    case Kind::K33:
      return make_catalog(CatalogId::bipartite(3, 3));
    case Kind::Petersen: {
      Graph g(10);
      for (int i = 0; i < 5; ++i) {
        g.connect(i, (i + 1) % 5);
        g.connect(i, i + 5);
        g.connect(i + 5, (i + 2) % 5 + 5);
      }
      return g;
    }
  }
  throw GraphError("catalog: unknown id");
}

Graph k5() { return make_catalog({CatalogId::Kind::K5}); }
Graph k33() { return make_catalog({CatalogId::Kind::K33}); }
Graph k5_minus() { return make_catalog({CatalogId::Kind::K5Minus}); }
Graph k33_minus() { return make_catalog({CatalogId::Kind::K33Minus}); }
Graph prism() { return make_catalog({CatalogId::Kind::Prism}); }
Graph wheel(int k) { return make_catalog(CatalogId::wheel(k)); }
Graph xi_graph() { return make_catalog({CatalogId::Kind::Xi}); }
Graph multiedge(int i) { return make_catalog(CatalogId::multiedge(i)); }

}  // namespace fm
