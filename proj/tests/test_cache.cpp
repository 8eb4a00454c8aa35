#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "freeminor/cache.hpp"

using namespace fm;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  const fs::path dir = fs::temp_directory_path() / ("freeminor-cache-" + tag + "-" + std::to_string(rd()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("verdicts persist across instances") {
  const fs::path dir = fresh_dir("persist");
  {
    VerdictCache cache(dir);
    CHECK(cache.size() == 0);
    CHECK_FALSE(cache.lookup("planar", "C~"));
    cache.store("planar", "C~", "1");
    cache.store("freeplanar", "C~", "1 def");
    CHECK(cache.lookup("planar", "C~") == "1");
  }
  VerdictCache again(dir);
  CHECK_FALSE(again.loaded_stale());
  CHECK(again.size() == 2);
  CHECK(again.lookup("freeplanar", "C~") == "1 def");
  CHECK_FALSE(again.lookup("planar", "D~{"));
  fs::remove_all(dir);
}

TEST_CASE("a cache from another version is discarded") {
  const fs::path dir = fresh_dir("stale");
  {
    VerdictCache old(dir, "freeminor 0.9.0");
    old.store("planar", "C~", "1");
  }
  VerdictCache cache(dir);
  CHECK(cache.loaded_stale());
  CHECK(cache.size() == 0);
  CHECK_FALSE(cache.lookup("planar", "C~"));
  cache.store("planar", "Bw", "1");
  VerdictCache reopened(dir);
  CHECK_FALSE(reopened.loaded_stale());
  CHECK(reopened.size() == 1);
  fs::remove_all(dir);
}

TEST_CASE("separator characters are refused") {
  const fs::path dir = fresh_dir("sep");
  VerdictCache cache(dir);
  CHECK_THROWS(cache.store("planar", "a\tb", "1"));
  CHECK_THROWS(cache.store("planar", "ab", "1\n"));
  fs::remove_all(dir);
}

TEST_CASE("concurrent stores all land") {
  const fs::path dir = fresh_dir("threads");
  {
    VerdictCache cache(dir);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
      pool.emplace_back([&cache, t] {
        for (int i = 0; i < 50; ++i) cache.store("k", std::to_string(t) + "-" + std::to_string(i), "1");
      });
    for (auto& th : pool) th.join();
    CHECK(cache.size() == 200);
  }
  CHECK(VerdictCache(dir).size() == 200);
  fs::remove_all(dir);
}
