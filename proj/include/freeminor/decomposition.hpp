#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freeminor/graph.hpp"

namespace fm {

enum class ComponentKind { Polygon, Bond, Proper3Connected };

std::string to_string(ComponentKind kind);

/// Edge of a decomposition node. Virtual edges carry the id shared with their
/// partner; the two copies keep the same (u, v) orientation so that gluing
/// can identify u with u and v with v.
struct ComponentEdge {
  int u = 0;
  int v = 0;
  bool is_virtual = false;
  int pair_id = -1;
};

/// Node of the triconnected decomposition, in local numbering.
struct MultiGraphComponent {
  int n = 0;
  std::vector<ComponentEdge> edges;
  ComponentKind kind = ComponentKind::Polygon;
  std::vector<int> original;  // local vertex -> vertex of the decomposed graph

  int virtual_count() const;
  /// Underlying simple graph with virtual edges treated as real. Parallel
  /// edges collapse.
  Graph simple_graph() const;
};

using EdgeRef = std::pair<int, int>;  // (component index, edge index)

struct ComponentTree {
  std::vector<MultiGraphComponent> components;
  std::map<EdgeRef, EdgeRef> pairing;  // an involution over virtual edges

  /// Indented text report, one block per component, virtual edges marked "v".
  std::string report() const;
};

/// Requires a 2-connected graph on at least 3 vertices (GraphError otherwise).
/// Split-pair splitting followed by merging of adjacent bonds and adjacent
/// polygons, giving the unique decomposition.
ComponentTree decompose_3connected(const Graph& g);

/// Reassemble a decomposition through its pairing alone: identify the
/// endpoints of partnered virtual edges and drop them.
Graph glue_components(const ComponentTree& tree);

}  // namespace fm
