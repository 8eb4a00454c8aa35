#include <doctest.h>

#include <set>

#include "freeminor/canonical.hpp"
#include "freeminor/enumerate.hpp"
#include "oracles.hpp"

using namespace fm;

TEST_CASE("classes agree with labelled enumeration for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (bool connected : {false, true}) {
      CAPTURE(n);
      CAPTURE(connected);
      const auto ours = enumerate_graphs(n, connected);
      const auto reference = oracle::classes_by_labelling(n, connected);
      REQUIRE(ours.size() == reference.size());
      for (const Graph& r : reference) {
        int hits = 0;
        for (const Graph& g : ours) hits += oracle::isomorphic(g, r);
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("class counts up to 8 vertices") {
  const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(enumerate_graphs(n, false).size() == all[n - 1]);
    CHECK(enumerate_graphs(n, true).size() == connected[n - 1]);
  }
}

TEST_CASE("representatives are canonical, distinct and sorted") {
  const auto graphs = enumerate_graphs(6, false);
  std::set<std::string> keys;
  std::string last;
  for (const Graph& g : graphs) {
    CHECK(canonical_form(g) == g);
    const std::string key = canonical_key(g);
    CHECK(key > last);
    last = key;
    keys.insert(key);
  }
  CHECK(keys.size() == graphs.size());
}

TEST_CASE("connected classes are connected") {
  for (const Graph& g : enumerate_graphs(6, true)) CHECK(oracle::connected(g));
}

TEST_CASE("up_to concatenates by order") {
  const auto graphs = enumerate_graphs_up_to(4, true);
  CHECK(graphs.size() == 1 + 1 + 2 + 6);
  for (std::size_t i = 1; i < graphs.size(); ++i) CHECK(graphs[i - 1].order() <= graphs[i].order());
}

TEST_CASE("orders outside 1..8 are rejected") {
  CHECK_THROWS(enumerate_graphs(0, false));
  CHECK_THROWS(enumerate_graphs(9, false));
}
