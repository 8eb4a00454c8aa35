#pragma once

#include <map>
#include <string>
#include <vector>

#include "freeminor/graph.hpp"

namespace fm {

/// Canonical labeling: labeling[old] = new. Relabeling by it yields the
/// lexicographically largest adjacency code among all labelings that respect
/// the colour-refined vertex partition, so isomorphic inputs give identical
/// relabeled graphs. Exhaustive with prefix and twin pruning; meant for n <= 10.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

/// Byte string equal for two graphs iff they are isomorphic. It is the
/// graph6 encoding of canonical_form(g).
std::string canonical_key(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Graphs kept one per isomorphism class, iterated in canonical-key order.
class GraphSet {
 public:
  GraphSet() = default;
  GraphSet(std::initializer_list<Graph> graphs);

  /// Returns false when an isomorphic member is already present.
  bool insert(const Graph& g);
  void merge(const GraphSet& other);
  bool contains(const Graph& g) const;

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  /// Members in canonical-key order.
  std::vector<Graph> members() const;
  std::vector<std::string> keys() const;

  bool operator==(const GraphSet& other) const;

 private:
  std::map<std::string, Graph> members_;
};

}  // namespace fm
