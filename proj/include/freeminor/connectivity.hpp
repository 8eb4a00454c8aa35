#pragma once

#include <vector>

#include "freeminor/graph.hpp"

namespace fm {

bool is_connected(const Graph& g);
/// Vertex sets of the connected components, in order of smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
/// True when the subgraph induced on `within` is connected (empty counts as connected).
bool is_connected_within(const Graph& g, VertexSet within);

VertexSet cut_vertices(const Graph& g);
/// Connected, at least 3 vertices, no cut vertex.
bool is_2_connected(const Graph& g);
/// At least 4 vertices and no separating set of fewer than 3 vertices.
bool is_3_connected(const Graph& g);
/// Simple, 3-connected and at least 4 vertices.
bool is_properly_3_connected(const Graph& g);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // 2-connected blocks with >= 3 vertices
  std::vector<Edge> bridges;      // blocks consisting of a single edge
};

BlockDecomposition decompose_blocks(const Graph& g);

}  // namespace fm
