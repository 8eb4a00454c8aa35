#include "freeminor/freeplanar.hpp"

#include <sstream>

#include "freeminor/canonical.hpp"
#include "freeminor/catalog.hpp"
#include "freeminor/connectivity.hpp"
#include "freeminor/planarity.hpp"

namespace fm {

std::string to_string(Route route) {
  switch (route) {
    case Route::Definition: return "def";
    case Route::Minors: return "minors";
    case Route::Structural: return "structure";
  }
  return "?";
}

std::string RejectedComponent::describe() const {
  std::ostringstream os;
  os << to_string(kind) << ':' << label << ":vertices={";
  for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? " " : "") << vertices[i];
  os << "}:virtual={";
  for (std::size_t i = 0; i < virtual_edges.size(); ++i)
    os << (i ? " " : "") << virtual_edges[i].u << '-' << virtual_edges[i].v;
  os << '}';
  return os.str();
}

std::string FreePlanarVerdict::witness_text() const {
  if (!witness) return "";
  struct Printer {
    std::string operator()(const BreakingEdge& b) const {
      return "nonedge:" + std::to_string(b.edge.u) + "-" + std::to_string(b.edge.v);
    }
    std::string operator()(const MinorModel& m) const {
      std::string name = is_isomorphic(m.pattern, k5_minus())    ? "K5minus"
                         : is_isomorphic(m.pattern, k33_minus()) ? "K33minus"
                         : is_isomorphic(m.pattern, k5())        ? "K5"
                         : is_isomorphic(m.pattern, k33())       ? "K33"
                                                                 : "minor";
      return "minor:" + name + ":" + m.to_compact();
    }
    std::string operator()(const RejectedComponent& c) const { return "component:" + c.describe(); }
  };
  return std::visit(Printer{}, *witness);
}

FreePlanarVerdict is_free_planar_def(const Graph& g) {
  FreePlanarVerdict verdict{true, Route::Definition, std::nullopt};
  const auto non_edges = g.non_edges();
  if (!is_planar_fast(g)) {
    verdict.is_free_planar = false;
    if (!non_edges.empty()) {
      verdict.witness = BreakingEdge{non_edges.front()};
    } else {
      verdict.witness = *kuratowski_certificate(g);
    }
    return verdict;
  }
  for (const Edge& e : non_edges) {
    if (!is_planar_fast(add_edge(g, e))) {
      verdict.is_free_planar = false;
      verdict.witness = BreakingEdge{e};
      return verdict;
    }
  }
  return verdict;
}

FreePlanarVerdict is_free_planar_minors(const Graph& g) {
  FreePlanarVerdict verdict{true, Route::Minors, std::nullopt};
  for (const Graph& pattern : {k5_minus(), k33_minus()}) {
    if (auto model = find_minor_model(g, pattern)) {
      verdict.is_free_planar = false;
      verdict.witness = std::move(*model);
      return verdict;
    }
  }
  return verdict;
}

std::vector<int> wheel_hubs(const Graph& g) {
  std::vector<int> hubs;
  const int n = g.order();
  if (n < 4 || g.size() != 2 * (n - 1)) return hubs;
  for (int h = 0; h < n; ++h) {
    if (g.degree(h) != n - 1) continue;
    const VertexSet rim = g.all_vertices() & ~bit(h);
    bool cycle = is_connected_within(g, rim);
    for_each_vertex(rim, [&](int v) {
      if (std::popcount(g.neighbors(v) & rim) != 2) cycle = false;
    });
    if (cycle) hubs.push_back(h);
  }
  return hubs;
}

ComponentClass classify_component(const MultiGraphComponent& c) {
  switch (c.kind) {
    case ComponentKind::Polygon: {
      if (c.n < 3 || static_cast<int>(c.edges.size()) != c.n) throw GraphError("classify_component: malformed polygon");
      return {true, "polygon C" + std::to_string(c.n)};
    }
    case ComponentKind::Bond: {
      if (c.n != 2 || c.edges.size() < 3) throw GraphError("classify_component: malformed bond");
      return {true, "bond m" + std::to_string(c.edges.size())};
    }
    case ComponentKind::Proper3Connected:
      break;
  }

  Graph simple = c.simple_graph();
  if (simple.size() != static_cast<int>(c.edges.size())) throw GraphError("classify_component: 3-connected node with parallel edges");
  std::vector<Edge> virtual_edges;
  for (const ComponentEdge& e : c.edges) {
    if (e.is_virtual) virtual_edges.emplace_back(e.u, e.v);
  }

  const auto hubs = wheel_hubs(simple);
  if (!hubs.empty()) {
    const int k = c.n - 1;
    for (int hub : hubs) {
      bool all_rim = true;
      bool all_spokes = true;
      for (const Edge& e : virtual_edges) {
        const bool spoke = e.u == hub || e.v == hub;
        all_rim = all_rim && !spoke;
        all_spokes = all_spokes && spoke;
      }
      if (all_rim) return {true, "wheel W" + std::to_string(k) + " rim-virtual"};
      if (k == 3 && all_spokes) return {true, "wheel W3 spoke-virtual"};
    }
    return {false, "wheel W" + std::to_string(k) + " with virtual spoke"};
  }

  if (is_isomorphic(simple, prism())) {
    for (const Edge& e : virtual_edges) {
      if (simple.neighbors(e.u) & simple.neighbors(e.v)) return {false, "prism with virtual triangle edge"};
    }
    return {true, "prism"};
  }
  return {false, "3-connected non-wheel non-prism"};
}

FreePlanarVerdict is_free_planar_structural(const Graph& g) {
  FreePlanarVerdict verdict{true, Route::Structural, std::nullopt};
  for (VertexSet block : decompose_blocks(g).blocks) {
    std::vector<int> names;
    for_each_vertex(block, [&](int v) { names.push_back(v); });
    const ComponentTree tree = decompose_3connected(induced_subgraph(g, block));
    for (const MultiGraphComponent& c : tree.components) {
      ComponentClass cls = classify_component(c);
      if (cls.acceptable) continue;
      RejectedComponent rejected{c.kind, cls.label, {}, {}};
      for (int v : c.original) rejected.vertices.push_back(names[v]);
      for (const ComponentEdge& e : c.edges) {
        if (e.is_virtual) rejected.virtual_edges.emplace_back(names[c.original[e.u]], names[c.original[e.v]]);
      }
      verdict.is_free_planar = false;
      verdict.witness = std::move(rejected);
      return verdict;
    }
  }
  return verdict;
}

bool verify_verdict(const Graph& g, const FreePlanarVerdict& verdict) {
  if (verdict.is_free_planar) return !verdict.witness.has_value();
  if (!verdict.witness) return false;
  if (const auto* b = std::get_if<BreakingEdge>(&*verdict.witness)) {
    if (g.has_edge(b->edge.u, b->edge.v) || b->edge.u == b->edge.v || b->edge.v >= g.order()) return false;
    return !is_planar_fast(add_edge(g, b->edge));
  }
  if (const auto* m = std::get_if<MinorModel>(&*verdict.witness)) {
    if (!(m->host == g) || !verify_minor_model(*m)) return false;
    for (const Graph& target : {k5_minus(), k33_minus(), k5(), k33()}) {
      if (is_isomorphic(m->pattern, target)) return true;
    }
    return false;
  }
  const auto& c = std::get<RejectedComponent>(*verdict.witness);
  return !c.vertices.empty() && c.vertices.back() < g.order();
}

bool check_no_xi_and_m4(const Graph& g) {
  if (!is_3_connected(g)) throw GraphError("check_no_xi_and_m4: graph must be 3-connected");
  return !has_minor(g, xi_graph()) && !has_minor(g, multiedge(4));
}

std::optional<Edge> exists_outerplanar_edge(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (is_outerplanar(delete_edge(g, e))) return e;
  }
  return std::nullopt;
}

}  // namespace fm
