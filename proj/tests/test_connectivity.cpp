#include <doctest.h>

#include <bit>

#include "freeminor/catalog.hpp"
#include "freeminor/connectivity.hpp"
#include "freeminor/enumerate.hpp"
#include "oracles.hpp"

using namespace fm;

TEST_CASE("connectivity levels agree with the deletion oracle") {
  for (const Graph& g : enumerate_graphs_up_to(7, false)) {
    CAPTURE(g.to_string());
    CHECK(is_connected(g) == oracle::connected(g));
    CHECK(is_2_connected(g) == oracle::two_connected(g));
    CHECK(is_3_connected(g) == oracle::three_connected(g));
  }
}

TEST_CASE("components partition the vertices") {
  const Graph g = disjoint_union(make_catalog(CatalogId::path(3)), disjoint_union(Graph(1), prism()));
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == (bit(0) | bit(1) | bit(2)));
  CHECK(comps[1] == bit(3));
  CHECK(std::popcount(comps[2]) == 6);
  CHECK(is_connected_within(g, bit(4) | bit(5)));
  CHECK_FALSE(is_connected_within(g, bit(0) | bit(2)));
  CHECK(is_connected_within(g, 0));
}

TEST_CASE("cut vertices and blocks of a bowtie with a tail") {
  // triangles 0-1-2 and 2-3-4, tail 4-5
  const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}});
  CHECK(cut_vertices(g) == (bit(2) | bit(4)));
  const auto blocks = decompose_blocks(g);
  REQUIRE(blocks.blocks.size() == 2);
  CHECK(blocks.blocks[0] == (bit(0) | bit(1) | bit(2)));
  CHECK(blocks.blocks[1] == (bit(2) | bit(3) | bit(4)));
  REQUIRE(blocks.bridges.size() == 1);
  CHECK(blocks.bridges[0] == Edge(4, 5));
}

TEST_CASE("blocks agree with 2-connectivity on random graphs") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(8, 0.3, rng);
    const auto d = decompose_blocks(g);
    for (VertexSet b : d.blocks) CHECK(oracle::two_connected(induced_subgraph(g, b)));
    std::size_t edges = d.bridges.size();
    for (VertexSet b : d.blocks) edges += induced_subgraph(g, b).size();
    CHECK(edges == static_cast<std::size_t>(g.size()));
  }
}

TEST_CASE("proper 3-connectivity") {
  CHECK(is_properly_3_connected(wheel(3)));
  CHECK(is_properly_3_connected(prism()));
  CHECK_FALSE(is_properly_3_connected(make_catalog(CatalogId::cycle(5))));
  CHECK_FALSE(is_properly_3_connected(make_catalog(CatalogId::complete(3))));
}
