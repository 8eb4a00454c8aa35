#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace fm {

struct TheoremReport {
  std::string id;
  std::size_t instances = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;    // printed with the report
  std::vector<std::string> details;  // sent to the log only
  double seconds = 0.0;              // never part of the rendered report

  bool passed() const { return violations.empty(); }
};

struct HarnessConfig {
  int max_n = 7;
  int jobs = 1;
  std::uint64_t seed = 20240601;
  int trials = 24;
  std::ostream* log = nullptr;  // receives details, e.g. certifier fallbacks
};

/// Calls f(i) for i in [0, count) on up to `jobs` threads; results come back
/// in index order whatever the scheduling.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, int jobs, F&& f) {
  std::vector<R> out(count);
  const std::size_t workers = std::min<std::size_t>(jobs < 1 ? 1 : static_cast<std::size_t>(jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count && !failed;) {
      try {
        out[i] = f(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// is_planar_minor against is_planar_fast on connected graphs n <= max_n.
TheoremReport check_planarity(int max_n, int jobs);
/// Three free-planarity routes on connected graphs n <= max_n. Returns the
/// "free-planar-minors" report (def vs minors) and the
/// "free-planar-structure" report (def vs structure).
std::vector<TheoremReport> check_free_planar_routes(int max_n, int jobs);
/// The operator applied to {K5, K3,3} gives {K5-, K3,3-}.
TheoremReport check_operator_kuratowski();
/// Structurally free-planar graphs n <= max_n stay planar under any added edge.
TheoremReport check_plus_edge_planar(int max_n, int jobs);
/// Properly 3-connected free-planar graphs n <= max_n are the wheels and the prism.
TheoremReport check_wheels_and_prism(int max_n, int jobs);
/// No 3-connected free-planar graph n <= max_n has M(4) or Xi as a minor.
std::vector<TheoremReport> check_no_m4_no_xi(int max_n, int jobs);
TheoremReport check_subdivision_prism();
/// W_k for k in [k_min, k_max]: a subdivided spoke leaves the class, any set
/// of subdivided rim edges stays in it.
TheoremReport check_subdivision_wheel(int k_min, int k_max);
/// K4: two non-adjacent subdivided edges give K3,3-; one edge or two adjacent
/// edges subdivided stay free-planar.
TheoremReport check_subdivision_tetra();
/// K in {K5, K3,3}: (K - e) + h planar for every edge e and non-edge h of
/// K - e, and K - e - f free-planar for every edge pair.
TheoremReport check_two_edge_deletions();
/// Single-edge deletions of K5- and K3,3- fall into 4 classes.
TheoremReport check_reduced_pair_deletions();
/// extract_certificate on every 2-connected g (n <= max_n) and non-edge xy
/// with g + xy nonplanar.
TheoremReport check_certifier(int max_n, int jobs);
/// Seeded random antichains over graphs on <= pool_n vertices, each with an
/// edge: the operator's obstruction set and the definition agree on every
/// graph n <= target_n.
TheoremReport check_operator(int trials, std::uint64_t seed, int pool_n, int target_n, int jobs);

/// Every report at the given bound. Throws std::invalid_argument unless
/// 1 <= max_n <= 8 and jobs >= 1.
std::vector<TheoremReport> verify_theorems(const HarnessConfig& config);

/// Byte-stable text: one status line per report, then notes and violations
/// (at most 20 of the latter per report).
std::string render_reports(const std::vector<TheoremReport>& reports);

}  // namespace fm
