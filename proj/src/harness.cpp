#include "freeminor/harness.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "freeminor/bridges.hpp"
#include "freeminor/canonical.hpp"
#include "freeminor/catalog.hpp"
#include "freeminor/connectivity.hpp"
#include "freeminor/enumerate.hpp"
#include "freeminor/free_operator.hpp"
#include "freeminor/freeplanar.hpp"
#include "freeminor/io.hpp"
#include "freeminor/minor.hpp"
#include "freeminor/planarity.hpp"

namespace fm {

namespace {

TheoremReport named(std::string id) {
  TheoremReport r;
  r.id = std::move(id);
  return r;
}

bool free_planar(const Graph& g) { return is_free_planar_def(g).is_free_planar; }

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// Per-instance outcome gathered by the parallel passes.
struct Outcome {
  std::size_t instances = 0;
  std::vector<std::string> violations;
  std::vector<std::string> details;
};

void absorb(TheoremReport& r, Outcome&& o) {
  r.instances += o.instances;
  for (auto& v : o.violations) r.violations.push_back(std::move(v));
  for (auto& d : o.details) r.details.push_back(std::move(d));
}

template <class F>
TheoremReport over_graphs(std::string id, const std::vector<Graph>& graphs, int jobs, F&& f) {
  TheoremReport r = named(std::move(id));
  auto outcomes = parallel_map<Outcome>(graphs.size(), jobs, [&](std::size_t i) { return f(graphs[i]); });
  for (auto& o : outcomes) absorb(r, std::move(o));
  return r;
}

std::vector<Graph> graphs_up_to(int max_n, bool connected) {
  return max_n < 1 ? std::vector<Graph>{} : enumerate_graphs_up_to(max_n, connected);
}

Graph subdivide_all(Graph g, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) g = subdivide_edge(g, e);
  return g;
}

}  // namespace

TheoremReport check_planarity(int max_n, int jobs) {
  return over_graphs("planarity-routes", graphs_up_to(max_n, true), jobs, [](const Graph& g) {
    Outcome o{1, {}, {}};
    const bool by_minors = is_planar_minor(g), fast = is_planar_fast(g);
    if (by_minors != fast)
      o.violations.push_back(write_graph6(g) + " minors=" + std::to_string(by_minors) + " fast=" + std::to_string(fast));
    return o;
  });
}

std::vector<TheoremReport> check_free_planar_routes(int max_n, int jobs) {
  const auto graphs = graphs_up_to(max_n, true);
  struct Pair {
    Outcome by_minors, by_structure;
  };
  auto results = parallel_map<Pair>(graphs.size(), jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    Pair p;
    p.by_minors.instances = p.by_structure.instances = 1;
    const auto def = is_free_planar_def(g);
    const auto minors = is_free_planar_minors(g);
    const auto structure = is_free_planar_structural(g);
    const std::string name = write_graph6(g);
    if (def.is_free_planar != minors.is_free_planar)
      p.by_minors.violations.push_back(name + " def=" + std::to_string(def.is_free_planar) + " minors=" + std::to_string(minors.is_free_planar));
    if (!verify_verdict(g, def)) p.by_minors.violations.push_back(name + " def witness rejected");
    if (!verify_verdict(g, minors)) p.by_minors.violations.push_back(name + " minors witness rejected");
    if (def.is_free_planar != structure.is_free_planar)
      p.by_structure.violations.push_back(name + " def=" + std::to_string(def.is_free_planar) + " structure=" + std::to_string(structure.is_free_planar));
    if (!verify_verdict(g, structure)) p.by_structure.violations.push_back(name + " structure witness rejected");
    return p;
  });
  TheoremReport by_minors = named("free-planar-minors"), by_structure = named("free-planar-structure");
  for (auto& p : results) {
    absorb(by_minors, std::move(p.by_minors));
    absorb(by_structure, std::move(p.by_structure));
  }
  return {by_minors, by_structure};
}

TheoremReport check_operator_kuratowski() {
  TheoremReport r = named("operator-kuratowski");
  GraphSet b;
  b.insert(k5());
  b.insert(k33());
  FreeOperatorStages stages;
  const GraphSet result = free_forbidden(b, &stages);
  GraphSet expected;
  expected.insert(k5_minus());
  expected.insert(k33_minus());
  r.instances = 1;
  r.notes.push_back("edge-deleted=" + std::to_string(stages.edge_deleted) + " split=" + std::to_string(stages.split) +
                    " result=" + std::to_string(stages.result));
  if (!(result == expected)) {
    std::string got;
    for (const auto& key : result.keys()) got += " " + key;
    r.violations.push_back("operator result:" + got);
  }
  return r;
}

TheoremReport check_plus_edge_planar(int max_n, int jobs) {
  return over_graphs("plus-edge-planar", graphs_up_to(max_n, false), jobs, [](const Graph& g) {
    Outcome o;
    if (!is_free_planar_structural(g).is_free_planar) return o;
    for (const Edge& e : g.non_edges()) {
      ++o.instances;
      if (!is_planar_minor(add_edge(g, e))) o.violations.push_back(write_graph6(g) + " + " + edge_text(e) + " nonplanar");
    }
    return o;
  });
}

TheoremReport check_wheels_and_prism(int max_n, int jobs) {
  const auto graphs = graphs_up_to(max_n, true);
  auto hits = parallel_map<int>(graphs.size(), jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    if (!is_properly_3_connected(g)) return 0;
    return free_planar(g) ? 2 : 1;
  });
  TheoremReport r = named("wheels-and-prism");
  GraphSet found, expected;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (hits[i] == 0) continue;
    ++r.instances;
    if (hits[i] == 2) found.insert(graphs[i]);
  }
  for (int k = 3; k + 1 <= max_n; ++k) expected.insert(wheel(k));
  if (max_n >= 6) expected.insert(prism());
  for (const Graph& g : found.members())
    if (!expected.contains(g)) r.violations.push_back("unexpected " + write_graph6(g));
  for (const Graph& g : expected.members())
    if (!found.contains(g)) r.violations.push_back("missing " + write_graph6(g));
  r.notes.push_back("classes=" + std::to_string(found.size()));
  return r;
}

std::vector<TheoremReport> check_no_m4_no_xi(int max_n, int jobs) {
  const auto graphs = graphs_up_to(max_n, true);
  const Graph m4 = multiedge(4), xi = xi_graph();
  auto results = parallel_map<int>(graphs.size(), jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    if (!is_3_connected(g) || !free_planar(g)) return 0;
    return 1 | (has_minor(g, m4) ? 2 : 0) | (has_minor(g, xi) ? 4 : 0);
  });
  TheoremReport ls = named("no-m4-minor"), xr = named("no-xi-minor");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!(results[i] & 1)) continue;
    ++ls.instances;
    ++xr.instances;
    if (results[i] & 2) ls.violations.push_back(write_graph6(graphs[i]) + " has an M(4) minor");
    if (results[i] & 4) xr.violations.push_back(write_graph6(graphs[i]) + " has a Xi minor");
  }
  return {ls, xr};
}

TheoremReport check_subdivision_prism() {
  TheoremReport r = named("subdivision-prism");
  const Graph p = prism();
  std::vector<Edge> matching;
  for (const Edge& e : p.edges()) {
    const bool triangle = (e.u < 3) == (e.v < 3);
    if (!triangle) {
      matching.push_back(e);
      continue;
    }
    ++r.instances;
    const Graph s = subdivide_edge(p, e);
    if (free_planar(s)) r.violations.push_back("triangle edge " + edge_text(e) + " subdivided is free-planar");
    if (!find_minor_model(s, k33_minus())) r.violations.push_back("triangle edge " + edge_text(e) + " subdivided lacks K3,3-");
  }
  for (unsigned mask = 0; mask < (1u << matching.size()); ++mask) {
    ++r.instances;
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < matching.size(); ++i)
      if (mask & (1u << i)) chosen.push_back(matching[i]);
    if (!free_planar(subdivide_all(p, chosen))) r.violations.push_back("matching subset " + std::to_string(mask) + " subdivided leaves the class");
  }
  return r;
}

TheoremReport check_subdivision_wheel(int k_min, int k_max) {
  TheoremReport r = named("subdivision-wheel");
  for (int k = k_min; k <= k_max; ++k) {
    const Graph w = wheel(k);
    std::vector<Edge> rim;
    for (int i = 0; i < k; ++i) {
      ++r.instances;
      const Edge spoke(i, k);
      if (free_planar(subdivide_edge(w, spoke)))
        r.violations.push_back("W" + std::to_string(k) + " spoke " + edge_text(spoke) + " subdivided is free-planar");
      rim.emplace_back(i, (i + 1) % k);
    }
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      ++r.instances;
      std::vector<Edge> chosen;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) chosen.push_back(rim[i]);
      if (!free_planar(subdivide_all(w, chosen)))
        r.violations.push_back("W" + std::to_string(k) + " rim subset " + std::to_string(mask) + " subdivided leaves the class");
    }
  }
  return r;
}

TheoremReport check_subdivision_tetra() {
  TheoremReport r = named("subdivision-tetra");
  const Graph k4 = make_catalog(CatalogId::complete(4));
  const auto edges = k4.edges();
  for (const Edge& e : edges) {
    ++r.instances;
    if (!free_planar(subdivide_edge(k4, e))) r.violations.push_back("edge " + edge_text(e) + " subdivided leaves the class");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      ++r.instances;
      const Edge e = edges[i], f = edges[j];
      const bool adjacent = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
      const Graph s = subdivide_all(k4, {e, f});
      const std::string what = edge_text(e) + " and " + edge_text(f);
      if (adjacent && !free_planar(s)) r.violations.push_back("adjacent " + what + " subdivided leaves the class");
      if (!adjacent && !is_isomorphic(s, k33_minus())) r.violations.push_back("non-adjacent " + what + " subdivided is not K3,3-");
    }
  }
  return r;
}

TheoremReport check_two_edge_deletions() {
  TheoremReport r = named("two-edge-deletions");
  for (const auto& [name, k] : {std::pair{"K5", k5()}, {"K33", k33()}}) {
    const auto edges = k.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Graph minus = delete_edge(k, edges[i]);
      for (const Edge& h : minus.non_edges()) {
        if (h == edges[i]) continue;
        ++r.instances;
        if (!is_planar_fast(add_edge(minus, h)))
          r.violations.push_back(std::string(name) + " - " + edge_text(edges[i]) + " + " + edge_text(h) + " nonplanar");
      }
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        ++r.instances;
        if (!free_planar(delete_edge(minus, edges[j])))
          r.violations.push_back(std::string(name) + " - " + edge_text(edges[i]) + " - " + edge_text(edges[j]) + " not free-planar");
      }
    }
  }
  return r;
}

TheoremReport check_reduced_pair_deletions() {
  TheoremReport r = named("reduced-pair-deletions");
  GraphSet b;
  b.insert(k5_minus());
  b.insert(k33_minus());
  const GraphSet deleted = edge_deleted_set(b);
  r.instances = static_cast<std::size_t>(k5_minus().size() + k33_minus().size());
  std::string classes;
  for (const auto& key : deleted.keys()) classes += " " + key;
  r.notes.push_back("classes=" + std::to_string(deleted.size()) + ":" + classes);
  if (deleted.size() != 4) r.violations.push_back("expected 4 classes, got " + std::to_string(deleted.size()));
  return r;
}

TheoremReport check_certifier(int max_n, int jobs) {
  std::vector<Graph> graphs;
  for (const Graph& g : graphs_up_to(max_n, true))
    if (is_2_connected(g)) graphs.push_back(g);
  const Graph k5m = k5_minus(), k33m = k33_minus();
  std::atomic<std::size_t> fallbacks{0};
  TheoremReport r = over_graphs("certifier", graphs, jobs, [&](const Graph& g) {
    Outcome o;
    for (const Edge& e : g.non_edges()) {
      if (is_planar_fast(add_edge(g, e))) continue;
      ++o.instances;
      const std::string where = write_graph6(g) + " " + std::to_string(e.u) + " " + std::to_string(e.v);
      try {
        const Certificate c = extract_certificate(g, e.u, e.v);
        const Graph& target = c.target == ReducedKuratowski::K5Minus ? k5m : k33m;
        if (!(c.model.host == g) || !verify_minor_model(c.model) || !is_isomorphic(c.model.pattern, target))
          o.violations.push_back(where + " invalid certificate");
        if (c.case_used == CertificateCase::Fallback) {
          ++fallbacks;
          o.details.push_back("fallback " + where + " " + to_string(c.target));
        }
      } catch (const std::exception& ex) {
        o.violations.push_back(where + " " + ex.what());
      }
    }
    return o;
  });
  std::ostringstream note;
  note << "fallback=" << fallbacks.load() << "/" << r.instances;
  if (r.instances) note << " (" << std::fixed << std::setprecision(4) << static_cast<double>(fallbacks) / static_cast<double>(r.instances) << ")";
  r.notes.push_back(note.str());
  if (r.instances > 0 && fallbacks == r.instances) r.violations.push_back("no certificate came from a case recipe");
  return r;
}

TheoremReport check_operator(int trials, std::uint64_t seed, int pool_n, int target_n, int jobs) {
  std::vector<Graph> pool;
  for (const Graph& g : graphs_up_to(pool_n, false))
    if (g.size() > 0) pool.push_back(g);
  const std::vector<Graph> targets = graphs_up_to(target_n, false);
  TheoremReport r = named("operator");
  if (pool.empty() || trials < 1) {
    r.violations.push_back("no trials run");
    return r;
  }
  auto outcomes = parallel_map<Outcome>(static_cast<std::size_t>(trials), jobs, [&](std::size_t t) {
    std::mt19937_64 rng(seed + t);
    const std::size_t want = 1 + rng() % 3;
    std::vector<std::size_t> order(pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    GraphSet b;
    for (std::size_t i : order) {
      if (b.size() == want) break;
      const Graph& cand = pool[i];
      bool comparable = false;
      for (const Graph& m : b.members()) comparable = comparable || has_minor(cand, m) || has_minor(m, cand);
      if (!comparable) b.insert(cand);
    }
    const GraphSet f = free_forbidden(b);
    Outcome o;
    std::string label = "trial " + std::to_string(t) + " b=";
    for (const auto& key : b.keys()) label += (label.back() == '=' ? "" : ",") + key;
    o.details.push_back(label + " obstructions=" + std::to_string(f.size()));
    for (const Graph& g : targets) {
      ++o.instances;
      const bool by_operator = excludes_all(g, f), by_definition = in_free_class(g, b);
      if (by_operator != by_definition)
        o.violations.push_back(label + " " + write_graph6(g) + " operator=" + std::to_string(by_operator) +
                               " definition=" + std::to_string(by_definition));
    }
    return o;
  });
  for (auto& o : outcomes) absorb(r, std::move(o));
  r.notes.push_back("trials=" + std::to_string(trials) + " seed=" + std::to_string(seed));
  return r;
}

std::vector<TheoremReport> verify_theorems(const HarnessConfig& config) {
  if (config.max_n < 1 || config.max_n > kMaxEnumerationOrder)
    throw std::invalid_argument("max_n must lie in [1, " + std::to_string(kMaxEnumerationOrder) + "]");
  if (config.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  const int n = config.max_n, jobs = config.jobs;

  std::vector<TheoremReport> out;
  auto timed = [&](auto&& run) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<TheoremReport> got;
    if constexpr (std::is_same_v<std::decay_t<decltype(run())>, TheoremReport>) {
      got.push_back(run());
    } else {
      got = run();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : got) {
      r.seconds = secs / static_cast<double>(got.size());
      if (config.log)
        for (const auto& d : r.details) *config.log << r.id << ": " << d << '\n';
      out.push_back(std::move(r));
    }
  };
  timed([&] { return check_planarity(n, jobs); });
  timed([&] { return check_free_planar_routes(n, jobs); });
  timed([&] { return check_operator_kuratowski(); });
  timed([&] { return check_plus_edge_planar(n, jobs); });
  timed([&] { return check_wheels_and_prism(n, jobs); });
  timed([&] { return check_no_m4_no_xi(n, jobs); });
  timed([&] { return check_subdivision_prism(); });
  // W3 is K4, whose subdivided edges are covered by the tetrahedron check.
  timed([&] { return check_subdivision_wheel(4, 6); });
  timed([&] { return check_subdivision_tetra(); });
  timed([&] { return check_two_edge_deletions(); });
  timed([&] { return check_reduced_pair_deletions(); });
  timed([&] { return check_certifier(n, jobs); });
  timed([&] { return check_operator(config.trials, config.seed, std::min(n, 5), std::min(n, 6), jobs); });
  return out;
}

std::string render_reports(const std::vector<TheoremReport>& reports) {
  constexpr std::size_t kShown = 20;
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    passed += r.passed();
    os << r.id << " instances=" << r.instances << " violations=" << r.violations.size() << ' '
       << (r.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& note : r.notes) os << "  note: " << note << '\n';
    for (std::size_t i = 0; i < r.violations.size() && i < kShown; ++i) os << "  violation: " << r.violations[i] << '\n';
    if (r.violations.size() > kShown) os << "  ... " << r.violations.size() - kShown << " more\n";
  }
  os << "summary: " << passed << "/" << reports.size() << " reports passed\n";
  return os.str();
}

}  // namespace fm
