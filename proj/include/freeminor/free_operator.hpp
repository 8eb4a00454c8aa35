#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "freeminor/canonical.hpp"
#include "freeminor/graph.hpp"

namespace fm {

enum class SplitSide { Left, Right, Both };

/// How a vertex split distributes the neighbours of `vertex`.
struct SplitSpec {
  int vertex = 0;
  std::map<int, SplitSide> assignment;  // neighbour -> side
};

/// v becomes the non-adjacent pair (v_L, v_R): v_L keeps index v, v_R is
/// appended. Adding the edge v_L v_R and contracting it gives back g.
Graph split_vertex(const Graph& g, const SplitSpec& spec);

/// Every assignment of N(v) to {Left, Right, Both}, degenerate ones included.
std::vector<SplitSpec> all_splits(const Graph& g, int v);

/// {G - e : G in b, e in E(G)} up to isomorphism.
GraphSet edge_deleted_set(const GraphSet& b);

/// All vertex splits of all members, deduplicated.
GraphSet vertex_split_set(const GraphSet& b);

struct FreeOperatorStages {
  std::size_t edge_deleted = 0;  // |B^-|
  std::size_t split = 0;         // |B^split|
  std::size_t result = 0;
  bool input_was_antichain = true;
};

/// Obstruction set of the class of graphs that stay in N(b) after adding any
/// one edge: the minimal members of edge_deleted_set(b) and vertex_split_set(b).
/// A non-antichain input is first reduced to its minimal members.
GraphSet free_forbidden(const GraphSet& b, FreeOperatorStages* stages = nullptr);

bool is_antichain(const GraphSet& b);

/// Definitional membership in Free(N(b)): g excludes b, and so does g + e for
/// every non-edge e.
bool in_free_class(const Graph& g, const GraphSet& b);

}  // namespace fm
