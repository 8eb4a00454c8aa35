#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "freeminor/catalog.hpp"
#include "freeminor/cli.hpp"
#include "freeminor/io.hpp"
#include "oracles.hpp"

using namespace fm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("planar records") {
  const Run r = run({"planar"}, write_graph6(k33()) + "\n" + write_graph6(make_catalog(CatalogId::cycle(6))) + "\n");
  CHECK(r.code == kExitOk);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("EFz_ 0 minor:K33:", 0) == 0);
  CHECK(lines[1] == "EhEG 1");
}

TEST_CASE("free-planarity with every route") {
  const Run r = run({"freeplanar", "--method", "all"}, "D^{\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("D^{ 1 0 all minor:K5minus:", 0) == 0);
  const Run c6 = run({"freeplanar", "--method", "structure"}, "EhEG\n");
  CHECK(c6.out == "EhEG 1 1 structure\n");
  const Run def = run({"freeplanar", "--method", "def"}, "D^{\n");
  CHECK(def.out.find(" def ") != std::string::npos);
}

TEST_CASE("jsonl output") {
  const Run r = run({"--format", "jsonl", "freeplanar", "--method", "minors"}, "EBz_\n");
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["graph"] == "EBz_");
  CHECK(j["planar"] == 1);
  CHECK(j["freeplanar"] == 0);
  CHECK(j["route"] == "minors");
  CHECK(j.contains("witness"));

  const Run cert = run({"--format", "jsonl", "certify", "--pair", "0,3"}, "EBz_\n");
  const auto c = nlohmann::json::parse(cert.out);
  CHECK(c["target"] == "K33minus");
  CHECK(c["branch_sets"].size() == 6);
}

TEST_CASE("operator on the Kuratowski pair") {
  const Run r = run({"freeop"}, "D~{\nEFz_\n");
  CHECK(r.code == kExitOk);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].rfind("# iteration 1 ", 0) == 0);
  CHECK(lines[1] == write_graph6(k5_minus()));
  CHECK(lines[2] == write_graph6(k33_minus()));
}

TEST_CASE("operator on the triangle matches the forest oracle") {
  const Run r = run({"freeop"}, "Bw\n");
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  // every graph with a 3-vertex path minor fails the free-forest definition
  const Graph out = parse_graph6(lines[1]);
  CHECK(oracle::isomorphic(out, make_catalog(CatalogId::path(3))));
  Graph p3 = out;
  CHECK(oracle::forest(p3));
  p3.connect(0, 1);
  p3.connect(1, 2);
  p3.connect(0, 2);
  CHECK_FALSE(oracle::forest(p3));
}

TEST_CASE("operator iterations and empty input") {
  const Run twice = run({"freeop", "--iterations", "2"}, "D~{\nEFz_\n");
  CHECK(twice.code == kExitOk);
  CHECK(twice.out.find("# iteration 2 ") != std::string::npos);
  const Run empty = run({"freeop"}, "");
  CHECK(empty.code == kExitUsage);
  CHECK_FALSE(empty.err.empty());
}

TEST_CASE("certify") {
  const Run r = run({"certify", "--pair", "0,3"}, "EBz_\n");
  CHECK(r.code == kExitOk);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 3);
  CHECK(lines[0] == "graph: EBz_");
  CHECK(lines[1] == "target: K33minus");
  const Run bad = run({"certify", "--pair", "0,3"}, "EFz_\n");
  CHECK(bad.code == kExitUsage);
  CHECK(bad.out.rfind("error <stdin>:1: ", 0) == 0);
}

TEST_CASE("decompose") {
  const Run r = run({"decompose"}, "Dhc\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("block 0 vertices=[0 1 2 3 4]") != std::string::npos);
  CHECK(r.out.find("polygon") != std::string::npos);
  const Run tail = run({"decompose"}, "Ch\n");  // a path: no blocks, three bridges
  CHECK(tail.code == kExitOk);
  CHECK(tail.out == "graph: Ch\nbridge 0-1\nbridge 1-2\nbridge 2-3\n");
}

TEST_CASE("enumerate") {
  const Run r = run({"enumerate", "4", "--connected"});
  CHECK(r.code == kExitOk);
  const auto lines = lines_of(r.out);
  const auto reference = oracle::classes_by_labelling(4, true);
  REQUIRE(lines.size() == reference.size());
  for (const Graph& ref : reference) {
    int hits = 0;
    for (const auto& line : lines) hits += oracle::isomorphic(parse_graph6(line), ref);
    CHECK(hits == 1);
  }
  CHECK(run({"enumerate", "9"}).code == kExitUsage);
  CHECK(run({"enumerate", "0"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--max-n", "4", "--trials", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("summary: 15/15 reports passed") != std::string::npos);
  CHECK(run({"verify", "--max-n", "9"}).code == kExitUsage);
  const Run j = run({"--format", "jsonl", "verify", "--max-n", "4", "--trials", "3"});
  const auto lines = lines_of(j.out);
  REQUIRE(lines.size() == 15);
  for (const auto& line : lines) CHECK(nlohmann::json::parse(line).contains("id"));
}

TEST_CASE("malformed input is reported per line") {
  const Run r = run({"planar"}, "C~\nbad!\nBw\n");
  CHECK(r.code == kExitUsage);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "C~ 1");
  CHECK(lines[1].rfind("error <stdin>:2: ", 0) == 0);
  CHECK(lines[2] == "Bw 1");
  CHECK(run({"nosuch"}).code == kExitUsage);
}

TEST_CASE("input files and edge-list documents") {
  const auto path = std::filesystem::temp_directory_path() / "freeminor-cli-input.txt";
  {
    std::ofstream f(path);
    f << "5 9\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
  }
  const Run r = run({"freeplanar", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("D^{ 1 0 ", 0) == 0);
  std::filesystem::remove(path);
  CHECK(run({"planar", "/nonexistent/file"}).code == kExitUsage);
}

TEST_CASE("a warm cache changes nothing") {
  std::random_device rd;
  const auto dir = std::filesystem::temp_directory_path() / ("freeminor-cli-cache-" + std::to_string(rd()));
  std::string input;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) input += write_graph6(oracle::random_graph(7, 0.4, rng)) + "\n";
  const Run plain = run({"freeplanar", "--method", "all"}, input);
  const Run cold = run({"--cache-dir", dir.string(), "freeplanar", "--method", "all"}, input);
  const Run warm = run({"--cache-dir", dir.string(), "freeplanar", "--method", "all"}, input);
  CHECK(plain.out == cold.out);
  CHECK(plain.out == warm.out);
  std::filesystem::remove_all(dir);
}
