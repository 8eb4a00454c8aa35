#include <doctest.h>

#include <random>

#include "freeminor/canonical.hpp"
#include "freeminor/catalog.hpp"
#include "freeminor/enumerate.hpp"
#include "freeminor/minor.hpp"
#include "oracles.hpp"

using namespace fm;

namespace {

void check_pair(const Graph& host, const Graph& pattern) {
  CAPTURE(host.to_string());
  CAPTURE(pattern.to_string());
  const bool expect = oracle::has_minor(host, pattern);
  CHECK(has_minor(host, pattern) == expect);
  const auto model = find_minor_model(host, pattern);
  CHECK(model.has_value() == expect);
  if (model) CHECK(verify_minor_model(*model));
}

}  // namespace

TEST_CASE("small patterns against the branch-set oracle") {
  std::vector<Graph> patterns = enumerate_graphs_up_to(4, false);
  std::vector<Graph> hosts = enumerate_graphs_up_to(5, false);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) hosts.push_back(oracle::random_graph(6, 0.5, rng));
  for (const Graph& h : hosts)
    for (const Graph& p : patterns) check_pair(h, p);
}

TEST_CASE("five- and six-vertex patterns against the oracle") {
  std::mt19937_64 rng(17);
  const Graph patterns[] = {k5_minus(), k33_minus(), prism(), wheel(4), xi_graph(), make_catalog(CatalogId::cycle(5))};
  for (int i = 0; i < 12; ++i) {
    const Graph host = oracle::random_graph(6, 0.7, rng);
    for (const Graph& p : patterns) check_pair(host, p);
  }
}

TEST_CASE("known minors") {
  const Graph petersen = make_catalog({CatalogId::Kind::Petersen});
  CHECK(has_minor(petersen, k5()));
  CHECK(has_minor(petersen, k33()));
  const auto model = find_minor_model(petersen, k5());
  REQUIRE(model);
  CHECK(verify_minor_model(*model));
  CHECK_FALSE(has_minor(prism(), k5_minus()));
  CHECK(has_minor(prism(), wheel(3)));
  CHECK_FALSE(has_minor(wheel(6), prism()));
  CHECK(has_minor(Graph(3), Graph(2)));
  CHECK_FALSE(has_minor(Graph(2), Graph(3)));
}

TEST_CASE("model checker rejects broken models") {
  const Graph c4 = make_catalog(CatalogId::cycle(4));
  const Graph k3 = make_catalog(CatalogId::complete(3));
  MinorModel good{k3, c4, {bit(0) | bit(1), bit(2), bit(3)}};
  CHECK(verify_minor_model(good));
  MinorModel overlap{k3, c4, {bit(0) | bit(1), bit(1), bit(3)}};
  CHECK_FALSE(verify_minor_model(overlap));
  MinorModel disconnected{k3, c4, {bit(0) | bit(2), bit(1), bit(3)}};
  CHECK_FALSE(verify_minor_model(disconnected));
  MinorModel missing_edge{k3, c4, {bit(0), bit(1), bit(2)}};
  CHECK_FALSE(verify_minor_model(missing_edge));
  MinorModel empty_set{k3, c4, {bit(0), 0, bit(2)}};
  CHECK_FALSE(verify_minor_model(empty_set));
}

TEST_CASE("cached and uncached answers agree") {
  MinorCache off;
  off.set_enabled(false);
  MinorCache on(64);  // small cap forces resets
  std::mt19937_64 rng(29);
  for (int i = 0; i < 120; ++i) {
    const Graph host = oracle::random_graph(7, 0.55, rng);
    const Graph pattern = i % 2 ? k5_minus() : k33_minus();
    CHECK(has_minor(host, pattern, on) == has_minor(host, pattern, off));
  }
  CHECK(off.size() == 0);
  CHECK(on.resets() > 0);
}

TEST_CASE("minimal members and exclusion") {
  const GraphSet b{k5(), k5_minus(), k33()};
  const GraphSet minimal = minimal_minors(b);
  CHECK(minimal == GraphSet{k5_minus(), k33()});
  CHECK(excludes_all(prism(), minimal));
  CHECK_FALSE(excludes_all(k5(), minimal));
}

TEST_CASE("spanning embedding") {
  const auto emb = find_spanning_embedding(wheel(5), make_catalog(CatalogId::cycle(6)));
  REQUIRE(emb);
  const Graph c6 = make_catalog(CatalogId::cycle(6));
  for (const Edge& e : c6.edges()) CHECK(wheel(5).has_edge((*emb)[e.u], (*emb)[e.v]));
  CHECK_FALSE(find_spanning_embedding(make_catalog(CatalogId::cycle(6)), prism()));
}
