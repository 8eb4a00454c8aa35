#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "freeminor/decomposition.hpp"
#include "freeminor/graph.hpp"
#include "freeminor/minor.hpp"

namespace fm {

enum class Route { Definition, Minors, Structural };

std::string to_string(Route route);

/// A decomposition node the structural classifier refused.
struct RejectedComponent {
  ComponentKind kind;
  std::string label;
  std::vector<int> vertices;  // vertices of the input graph
  std::vector<Edge> virtual_edges;

  std::string describe() const;
};

/// Non-edge whose addition makes the graph nonplanar.
struct BreakingEdge {
  Edge edge;
};

using FreePlanarWitness = std::variant<BreakingEdge, MinorModel, RejectedComponent>;

struct FreePlanarVerdict {
  bool is_free_planar = false;
  Route route = Route::Definition;
  std::optional<FreePlanarWitness> witness;  // present iff !is_free_planar

  std::string witness_text() const;
};

/// g planar and g + e planar for every non-edge e. Complete graphs count
/// only when planar (witnessed by a Kuratowski model otherwise).
FreePlanarVerdict is_free_planar_def(const Graph& g);
/// No K5- and no K3,3- minor.
FreePlanarVerdict is_free_planar_minors(const Graph& g);
/// Every component of every block's triconnected decomposition acceptable.
FreePlanarVerdict is_free_planar_structural(const Graph& g);

/// Checks a verdict's witness against g. Positive verdicts have no witness.
bool verify_verdict(const Graph& g, const FreePlanarVerdict& verdict);

struct ComponentClass {
  bool acceptable = false;
  std::string label;
};

/// Polygons and bonds always pass. A wheel passes when some hub makes every
/// virtual edge a rim edge, or (for K4) every virtual edge a spoke. A prism
/// passes when no virtual edge lies on a triangle. Anything else is refused.
/// Throws GraphError for a component whose kind does not match its edges.
ComponentClass classify_component(const MultiGraphComponent& c);

/// Requires a 3-connected g. True iff neither Xi nor M(4) is a minor.
bool check_no_xi_and_m4(const Graph& g);

/// Some edge e with g - e outerplanar, if any.
std::optional<Edge> exists_outerplanar_edge(const Graph& g);

/// Hub vertex when g is a wheel W_k (k >= 3); every hub for K4.
std::vector<int> wheel_hubs(const Graph& g);

}  // namespace fm
