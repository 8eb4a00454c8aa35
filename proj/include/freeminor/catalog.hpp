#pragma once

#include <string>

#include "freeminor/graph.hpp"

namespace fm {

/// Named graphs. Parameterised families carry their parameter in `param`
/// (and `param2` for complete bipartite graphs).
struct CatalogId {
  enum class Kind {
    Complete,           // K(param)
    Cycle,              // C(param), param >= 3
    Path,               // P(param) on param vertices
    CompleteBipartite,  // K(param, param2)
    Wheel,              // W(param): rim 0..param-1, hub = param
    Prism,              // triangles 012, 345; matching 0-3 1-4 2-5
    Multiedge,          // M(param): terminals 0,1 joined by an edge and param-1 paths of length 2
    Xi,                 // K2,3 (x=0, y=1 | u=2, v=3, s=4) plus pendant t=5 on s
    K5Minus,            // K5 minus edge 0-1
    K33Minus,           // K3,3 on {0,1,2}|{3,4,5} minus edge 0-3
    K5,
    K33,
    Petersen,
  };

  Kind kind;
  int param = 0;
  int param2 = 0;

  std::string name() const;

  static CatalogId complete(int n) { return {Kind::Complete, n}; }
  static CatalogId cycle(int n) { return {Kind::Cycle, n}; }
  static CatalogId path(int n) { return {Kind::Path, n}; }
  static CatalogId bipartite(int a, int b) { return {Kind::CompleteBipartite, a, b}; }
  static CatalogId wheel(int k) { return {Kind::Wheel, k}; }
  static CatalogId multiedge(int i) { return {Kind::Multiedge, i}; }
};

/// Throws GraphError on an invalid parameter.
Graph make_catalog(CatalogId id);

// Shorthands for the graphs used throughout.
Graph k5();
Graph k33();
Graph k5_minus();
Graph k33_minus();
Graph prism();
Graph wheel(int k);
Graph xi_graph();
Graph multiedge(int i);

}  // namespace fm
