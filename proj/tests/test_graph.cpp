#include <doctest.h>

#include "freeminor/catalog.hpp"
#include "freeminor/canonical.hpp"
#include "freeminor/graph.hpp"

using namespace fm;

TEST_CASE("edges are normalised and sorted") {
  Graph g(4, {{2, 1}, {0, 3}, {3, 2}});
  CHECK(g.size() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  const auto edges = g.edges();
  REQUIRE(edges.size() == 3);
  CHECK(edges[0] == Edge(0, 3));
  CHECK(edges[1] == Edge(1, 2));
  CHECK(edges[2] == Edge(2, 3));
  CHECK(g.non_edges().size() == 3);
  CHECK(g.to_string() == "n=4 0-3 1-2 2-3");
}

TEST_CASE("loops and out-of-range vertices are rejected") {
  Graph g(3);
  CHECK_THROWS_AS(g.connect(1, 1), GraphError);
  CHECK_THROWS_AS(g.connect(0, 3), GraphError);
  CHECK_THROWS_AS(Graph(33), GraphError);
  CHECK_THROWS_AS(Graph(-1), GraphError);
}

TEST_CASE("degree sequence is descending") {
  const Graph w = wheel(5);
  const std::vector<int> expected{5, 3, 3, 3, 3, 3};
  CHECK(w.degree_sequence() == expected);
}

TEST_CASE("delete_vertex renumbers the rest") {
  const Graph p = make_catalog(CatalogId::path(4));  // 0-1-2-3
  const Graph h = delete_vertex(p, 1);
  CHECK(h.order() == 3);
  CHECK(h.size() == 1);
  CHECK(h.has_edge(1, 2));
  CHECK_THROWS_AS(delete_vertex(p, 4), GraphError);
}

TEST_CASE("edge deletion and addition enforce their preconditions") {
  const Graph c = make_catalog(CatalogId::cycle(4));
  CHECK(delete_edge(c, {0, 1}).size() == 3);
  CHECK_THROWS_AS(delete_edge(c, {0, 2}), GraphError);
  CHECK(add_edge(c, {0, 2}).size() == 5);
  CHECK_THROWS_AS(add_edge(c, {0, 1}), GraphError);
}

TEST_CASE("subdivision appends the new vertex") {
  const Graph k3 = make_catalog(CatalogId::complete(3));
  const Graph s = subdivide_edge(k3, {0, 1});
  CHECK(s.order() == 4);
  CHECK_FALSE(s.has_edge(0, 1));
  CHECK(s.has_edge(0, 3));
  CHECK(s.has_edge(1, 3));
  CHECK(is_isomorphic(s, make_catalog(CatalogId::cycle(4))));
  CHECK_THROWS_AS(subdivide_edge(s, {0, 1}), GraphError);
}

TEST_CASE("contraction merges parallel edges and drops the loop") {
  const Graph k4 = make_catalog(CatalogId::complete(4));
  const Graph c = contract_edge(k4, {1, 2});
  CHECK(c.order() == 3);
  CHECK(c.size() == 3);
  // contracting a subdivided edge undoes the subdivision
  const Graph c5 = make_catalog(CatalogId::cycle(5));
  CHECK(is_isomorphic(contract_edge(subdivide_edge(c5, {0, 1}), {0, 5}), c5));
  CHECK_THROWS_AS(contract_edge(c5, {0, 2}), GraphError);
}

TEST_CASE("induced subgraph, relabel, complement and union") {
  const Graph p = prism();
  const Graph tri = induced_subgraph(p, bit(0) | bit(1) | bit(2));
  CHECK(tri == make_catalog(CatalogId::complete(3)));

  const std::vector<int> perm{1, 2, 0};
  const Graph path = make_catalog(CatalogId::path(3));  // 0-1-2
  const Graph moved = relabel(path, perm);
  CHECK(moved.has_edge(1, 2));
  CHECK(moved.has_edge(2, 0));
  const std::vector<int> bad{0, 0, 1};
  CHECK_THROWS_AS(relabel(path, bad), GraphError);

  CHECK(is_isomorphic(complement(make_catalog(CatalogId::cycle(6))), p));
  const Graph u = disjoint_union(path, tri);
  CHECK(u.order() == 6);
  CHECK(u.size() == 5);
  CHECK(u.has_edge(3, 4));
}
