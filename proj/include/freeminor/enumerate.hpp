#pragma once

#include <vector>

#include "freeminor/graph.hpp"

namespace fm {

inline constexpr int kMaxEnumerationOrder = 8;

/// One canonical representative per isomorphism class of graphs on exactly n
/// vertices, ordered by canonical key. Supports 1 <= n <= 8; results are
/// memoised process-wide.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

/// All classes with 1 <= order <= max_n, by order then canonical key.
std::vector<Graph> enumerate_graphs_up_to(int max_n, bool connected_only);

}  // namespace fm
