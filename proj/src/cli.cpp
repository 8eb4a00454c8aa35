#include "freeminor/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "freeminor/bridges.hpp"
#include "freeminor/cache.hpp"
#include "freeminor/canonical.hpp"
#include "freeminor/catalog.hpp"
#include "freeminor/connectivity.hpp"
#include "freeminor/decomposition.hpp"
#include "freeminor/enumerate.hpp"
#include "freeminor/free_operator.hpp"
#include "freeminor/freeplanar.hpp"
#include "freeminor/harness.hpp"
#include "freeminor/io.hpp"
#include "freeminor/planarity.hpp"

namespace fm {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  int jobs = 1;
  std::string cache_dir;
  std::vector<std::string> inputs;
  std::string method = "def";
  int iterations = 1;
  std::string pair;
  int order = 0;
  bool connected = false;
  int max_n = 7;
  std::uint64_t seed = HarnessConfig{}.seed;
  int trials = HarnessConfig{}.trials;
  std::string log_path;
  bool timing = false;
};

struct Loaded {
  std::string source;
  int line = 0;
  std::optional<Graph> graph;
  std::string error;
};

// One output unit: a text line (or block) and its jsonl mirror.
struct Record {
  std::string text;
  json object;
  bool error = false;
  bool violation = false;
};

std::vector<Loaded> load_inputs(const std::vector<std::string>& inputs, std::istream& in) {
  std::vector<std::string> names = inputs.empty() ? std::vector<std::string>{"-"} : inputs;
  std::vector<Loaded> out;
  for (const std::string& name : names) {
    std::string document;
    if (name == "-") {
      document.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      std::ifstream file(name, std::ios::binary);
      if (!file) {
        out.push_back({name, 0, std::nullopt, "cannot open file"});
        continue;
      }
      document.assign(std::istreambuf_iterator<char>(file), {});
    }
    const std::string source = name == "-" ? "<stdin>" : name;
    for (const InputRecord& rec : split_input(document)) {
      Loaded l{source, rec.line, std::nullopt, {}};
      try {
        l.graph = looks_like_edge_list(rec.text) ? parse_edge_list(rec.text) : parse_graph6(rec.text);
      } catch (const std::exception& ex) {
        l.error = ex.what();
      }
      out.push_back(std::move(l));
    }
  }
  return out;
}

Record error_record(const Loaded& l, const std::string& message, bool violation = false) {
  Record r;
  r.error = !violation;
  r.violation = violation;
  r.text = "error " + l.source + ":" + std::to_string(l.line) + ": " + message;
  r.object = {{"source", l.source}, {"line", l.line}, {"error", message}};
  return r;
}

void emit(std::ostream& out, const Options& opt, const Record& r) {
  if (opt.format == "jsonl") {
    out << r.object.dump() << '\n';
  } else {
    out << r.text;
    if (r.text.empty() || r.text.back() != '\n') out << '\n';
  }
}

int finish(std::ostream& out, const Options& opt, const std::vector<Record>& records) {
  int code = kExitOk;
  for (const Record& r : records) {
    emit(out, opt, r);
    if (r.error) code = kExitUsage;
    if (r.violation && code == kExitOk) code = kExitViolation;
  }
  return code;
}

std::unique_ptr<VerdictCache> open_cache(const Options& opt) {
  if (opt.cache_dir.empty()) return nullptr;
  return std::make_unique<VerdictCache>(opt.cache_dir);
}

std::string kuratowski_text(const MinorModel& m) {
  return std::string("minor:") + (is_isomorphic(m.pattern, k5()) ? "K5" : "K33") + ":" + m.to_compact();
}

// Planarity with the cache consulted for positive answers only: negatives
// always recompute so that the witness is printed identically.
bool cached_planar(const Graph& g, VerdictCache* cache, const std::string& key) {
  if (cache) {
    if (auto hit = cache->lookup("planar", key); hit && *hit == "1") return true;
  }
  const bool planar = is_planar_fast(g);
  if (cache) cache->store("planar", key, planar ? "1" : "0");
  return planar;
}

int cmd_planar(const Options& opt, std::istream& in, std::ostream& out) {
  const auto loaded = load_inputs(opt.inputs, in);
  auto cache = open_cache(opt);
  auto records = parallel_map<Record>(loaded.size(), opt.jobs, [&](std::size_t i) {
    const Loaded& l = loaded[i];
    if (!l.graph) return error_record(l, l.error);
    const Graph& g = *l.graph;
    const std::string g6 = write_graph6(g);
    const bool planar = cached_planar(g, cache.get(), canonical_key(g));
    Record r;
    r.text = g6 + " " + (planar ? "1" : "0");
    r.object = {{"graph", g6}, {"planar", planar ? 1 : 0}};
    if (!planar) {
      const std::string w = kuratowski_text(*kuratowski_certificate(g));
      r.text += " " + w;
      r.object["witness"] = w;
    }
    return r;
  });
  return finish(out, opt, records);
}

FreePlanarVerdict run_route(const Graph& g, const std::string& method) {
  if (method == "minors") return is_free_planar_minors(g);
  if (method == "structure") return is_free_planar_structural(g);
  return is_free_planar_def(g);
}

int cmd_freeplanar(const Options& opt, std::istream& in, std::ostream& out) {
  const auto loaded = load_inputs(opt.inputs, in);
  auto cache = open_cache(opt);
  auto records = parallel_map<Record>(loaded.size(), opt.jobs, [&](std::size_t i) {
    const Loaded& l = loaded[i];
    if (!l.graph) return error_record(l, l.error);
    const Graph& g = *l.graph;
    const std::string g6 = write_graph6(g);
    const std::string key = canonical_key(g);
    const bool planar = cached_planar(g, cache.get(), key);

    bool free_planar = false;
    std::string witness;
    if (opt.method == "all") {
      const auto def = is_free_planar_def(g), minors = is_free_planar_minors(g), structure = is_free_planar_structural(g);
      if (def.is_free_planar != minors.is_free_planar || def.is_free_planar != structure.is_free_planar) {
        return error_record(l, "routes disagree def=" + std::to_string(def.is_free_planar) + " minors=" +
                                   std::to_string(minors.is_free_planar) + " structure=" + std::to_string(structure.is_free_planar),
                            true);
      }
      free_planar = def.is_free_planar;
      witness = minors.witness_text();
    } else {
      std::optional<std::string> hit = cache ? cache->lookup("freeplanar", key) : std::nullopt;
      if (hit && *hit == "1") {
        free_planar = true;
      } else {
        const auto verdict = run_route(g, opt.method);
        free_planar = verdict.is_free_planar;
        witness = verdict.witness_text();
      }
    }
    if (cache) cache->store("freeplanar", key, free_planar ? "1" : "0");

    Record r;
    r.text = g6 + " " + (planar ? "1" : "0") + " " + (free_planar ? "1" : "0") + " " + opt.method;
    r.object = {{"graph", g6}, {"planar", planar ? 1 : 0}, {"freeplanar", free_planar ? 1 : 0}, {"route", opt.method}};
    if (!witness.empty()) {
      r.text += " " + witness;
      r.object["witness"] = witness;
    }
    return r;
  });
  return finish(out, opt, records);
}

int cmd_freeop(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  GraphSet b;
  for (const Loaded& l : load_inputs(opt.inputs, in)) {
    if (!l.graph) {
      emit(out, opt, error_record(l, l.error));
      return kExitUsage;
    }
    b.insert(*l.graph);
  }
  if (b.empty()) {
    err << "freeop: no input graphs\n";
    return kExitUsage;
  }
  for (int it = 1; it <= opt.iterations; ++it) {
    FreeOperatorStages stages;
    b = free_forbidden(b, &stages);
    Record r;
    std::ostringstream text;
    text << "# iteration " << it << " edge-deleted=" << stages.edge_deleted << " split=" << stages.split
         << " result=" << stages.result << '\n';
    json graphs = json::array();
    for (const Graph& g : b.members()) {
      text << write_graph6(g) << '\n';
      graphs.push_back(write_graph6(g));
    }
    r.text = text.str();
    r.object = {{"iteration", it}, {"edge_deleted", stages.edge_deleted}, {"split", stages.split}, {"result", stages.result}, {"graphs", graphs}};
    emit(out, opt, r);
  }
  return kExitOk;
}

std::optional<std::pair<int, int>> parse_pair(const std::string& text) {
  int x = 0, y = 0;
  char comma = 0;
  std::istringstream is(text);
  if (!(is >> x >> comma >> y) || comma != ',' || is.peek() != EOF) return std::nullopt;
  return std::pair{x, y};
}

int cmd_certify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto pair = parse_pair(opt.pair);
  if (!pair) {
    err << "certify: --pair expects x,y\n";
    return kExitUsage;
  }
  const auto loaded = load_inputs(opt.inputs, in);
  auto records = parallel_map<Record>(loaded.size(), opt.jobs, [&](std::size_t i) {
    const Loaded& l = loaded[i];
    if (!l.graph) return error_record(l, l.error);
    try {
      const Certificate c = extract_certificate(*l.graph, pair->first, pair->second);
      Record r;
      const std::string g6 = write_graph6(*l.graph);
      r.text = "graph: " + g6 + "\n" + c.to_text();
      json sets = json::array();
      for (VertexSet s : c.model.branch_sets) {
        json members = json::array();
        for_each_vertex(s, [&](int v) { members.push_back(v); });
        sets.push_back(members);
      }
      r.object = {{"graph", g6}, {"target", to_string(c.target)}, {"case", to_string(c.case_used)}, {"cycle", c.cycle}, {"branch_sets", sets}};
      return r;
    } catch (const GraphError& ex) {
      return error_record(l, ex.what());
    }
  });
  return finish(out, opt, records);
}

// Decomposition of each block, with component vertices named as in the input.
int cmd_decompose(const Options& opt, std::istream& in, std::ostream& out) {
  const auto loaded = load_inputs(opt.inputs, in);
  auto records = parallel_map<Record>(loaded.size(), opt.jobs, [&](std::size_t i) {
    const Loaded& l = loaded[i];
    if (!l.graph) return error_record(l, l.error);
    const Graph& g = *l.graph;
    const std::string g6 = write_graph6(g);
    const BlockDecomposition blocks = decompose_blocks(g);
    Record r;
    std::ostringstream text;
    text << "graph: " << g6 << '\n';
    json jblocks = json::array();
    for (std::size_t bi = 0; bi < blocks.blocks.size(); ++bi) {
      std::vector<int> names;
      for_each_vertex(blocks.blocks[bi], [&](int v) { names.push_back(v); });
      ComponentTree tree = decompose_3connected(induced_subgraph(g, blocks.blocks[bi]));
      for (auto& c : tree.components)
        for (int& v : c.original) v = names[v];
      text << "block " << bi << " vertices=[";
      for (std::size_t k = 0; k < names.size(); ++k) text << (k ? " " : "") << names[k];
      text << "]\n" << tree.report();
      json comps = json::array();
      for (const auto& c : tree.components) {
        json edges = json::array();
        for (const auto& e : c.edges) edges.push_back({e.u, e.v, e.is_virtual});
        comps.push_back({{"kind", to_string(c.kind)}, {"vertices", c.original}, {"edges", edges}});
      }
      jblocks.push_back({{"vertices", names}, {"components", comps}});
    }
    json jbridges = json::array();
    for (const Edge& e : blocks.bridges) {
      text << "bridge " << e.u << '-' << e.v << '\n';
      jbridges.push_back({e.u, e.v});
    }
    r.text = text.str();
    r.object = {{"graph", g6}, {"blocks", jblocks}, {"bridges", jbridges}};
    return r;
  });
  return finish(out, opt, records);
}

int cmd_enumerate(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.order < 1 || opt.order > kMaxEnumerationOrder) {
    err << "enumerate: n must lie in [1, " << kMaxEnumerationOrder << "]\n";
    return kExitUsage;
  }
  for (const Graph& g : enumerate_graphs(opt.order, opt.connected)) {
    Record r;
    r.text = write_graph6(g);
    r.object = {{"graph", r.text}};
    emit(out, opt, r);
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  HarnessConfig config;
  config.max_n = opt.max_n;
  config.jobs = opt.jobs;
  config.seed = opt.seed;
  config.trials = opt.trials;
  std::ofstream log_file;
  if (opt.log_path == "-") {
    config.log = &err;
  } else if (!opt.log_path.empty()) {
    log_file.open(opt.log_path);
    if (!log_file) {
      err << "verify: cannot open log file " << opt.log_path << '\n';
      return kExitUsage;
    }
    config.log = &log_file;
  }
  std::vector<TheoremReport> reports;
  try {
    reports = verify_theorems(config);
  } catch (const std::invalid_argument& ex) {
    err << "verify: " << ex.what() << '\n';
    return kExitUsage;
  }
  if (opt.format == "jsonl") {
    for (const auto& r : reports)
      out << json{{"id", r.id}, {"instances", r.instances}, {"violations", r.violations}, {"notes", r.notes}, {"passed", r.passed()}}.dump()
          << '\n';
  } else {
    out << render_reports(reports);
  }
  if (opt.timing)
    for (const auto& r : reports) err << "time " << r.id << ' ' << r.seconds << '\n';
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.passed(); });
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Free-minor-closed classes: planarity, free-planarity, obstruction sets, certificates"};
  app.name("freeminor");
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "jsonl"}));
  app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", opt.cache_dir, "Directory for the verdict cache");

  auto* planar = app.add_subcommand("planar", "Planarity verdict per input graph");
  planar->add_option("inputs", opt.inputs, "graph6 or edge-list files (stdin if none)");

  auto* freeplanar = app.add_subcommand("freeplanar", "Free-planarity verdict per input graph");
  freeplanar->add_option("inputs", opt.inputs, "graph6 or edge-list files (stdin if none)");
  freeplanar->add_option("--method", opt.method, "def, minors, structure or all")
      ->check(CLI::IsMember({"def", "minors", "structure", "all"}));

  auto* freeop = app.add_subcommand("freeop", "Apply the obstruction-set operator");
  freeop->add_option("inputs", opt.inputs, "files holding the forbidden minors");
  freeop->add_option("--iterations", opt.iterations, "Number of applications")->check(CLI::PositiveNumber);

  auto* certify = app.add_subcommand("certify", "Reduced Kuratowski certificate for a non-edge");
  certify->add_option("inputs", opt.inputs, "graph6 or edge-list files (stdin if none)");
  certify->add_option("--pair", opt.pair, "Non-adjacent vertices x,y")->required();

  auto* decompose = app.add_subcommand("decompose", "Triconnected decomposition of every block");
  decompose->add_option("inputs", opt.inputs, "graph6 or edge-list files (stdin if none)");

  auto* enumerate = app.add_subcommand("enumerate", "All graphs on n vertices up to isomorphism");
  enumerate->add_option("n", opt.order, "Vertex count")->required();
  enumerate->add_flag("--connected", opt.connected, "Connected graphs only");

  auto* verify = app.add_subcommand("verify", "Exhaustive theorem verification");
  verify->add_option("--max-n", opt.max_n, "Enumeration bound (at most 8)");
  verify->add_option("--seed", opt.seed, "Seed for random antichains");
  verify->add_option("--trials", opt.trials, "Random antichain trials");
  verify->add_option("--log", opt.log_path, "File receiving per-instance details ('-' for stderr)");
  verify->add_flag("--timing", opt.timing, "Print wall times on stderr");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*planar) return cmd_planar(opt, in, out);
    if (*freeplanar) return cmd_freeplanar(opt, in, out);
    if (*freeop) return cmd_freeop(opt, in, out, err);
    if (*certify) return cmd_certify(opt, in, out, err);
    if (*decompose) return cmd_decompose(opt, in, out);
    if (*enumerate) return cmd_enumerate(opt, out, err);
    if (*verify) return cmd_verify(opt, out, err);
  } catch (const std::exception& ex) {
    err << "freeminor: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fm
