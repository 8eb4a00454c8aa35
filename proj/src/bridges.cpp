#include "freeminor/bridges.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "freeminor/catalog.hpp"
#include "freeminor/connectivity.hpp"
#include "freeminor/planarity.hpp"

namespace fm {

VertexSet BridgeRecord::leg_set() const {
  VertexSet s = 0;
  for (int v : legs) s |= bit(v);
  return s;
}

namespace {

using Path = std::vector<int>;

// Cycle positions measured clockwise from x.
struct Frame {
  std::vector<int> cycle;
  std::array<int, Graph::kMaxVertices> index;  // -1 off the cycle
  int x = 0;
  int y = 0;
  int len = 0;
  int ry = 0;  // rel(y)

  Frame(std::span<const int> c, int x_, int y_) : cycle(c.begin(), c.end()), x(x_), y(y_), len(static_cast<int>(c.size())) {
    index.fill(-1);
    for (int i = 0; i < len; ++i) index[cycle[i]] = i;
    if (x < 0 || x >= Graph::kMaxVertices || y < 0 || y >= Graph::kMaxVertices || index[x] < 0 || index[y] < 0 || x == y)
      throw GraphError("bridges: x and y must be distinct cycle vertices");
    ry = rel(y);
  }
  int rel(int v) const { return (index[v] - index[x] + len) % len; }
  bool in_a1(int v) const { return index[v] >= 0 && rel(v) > 0 && rel(v) < ry; }
  bool in_a2(int v) const { return index[v] >= 0 && rel(v) > ry; }
  int at(int r) const { return cycle[(index[x] + r) % len]; }

  // Clockwise arc from u to v, both included.
  Path arc(int u, int v) const {
    Path p{u};
    for (int i = index[u]; cycle[i] != v;) {
      i = (i + 1) % len;
      p.push_back(cycle[i]);
    }
    return p;
  }
  // Anticlockwise arc from u to v, both included.
  Path arc_back(int u, int v) const {
    Path p = arc(v, u);
    std::reverse(p.begin(), p.end());
    return p;
  }
};

void validate_cycle(const Graph& g, std::span<const int> cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3) throw GraphError("bridges_of_cycle: cycle needs at least 3 vertices");
  VertexSet seen = 0;
  for (int i = 0; i < len; ++i) {
    const int v = cycle[i];
    if (v < 0 || v >= g.order() || (seen & bit(v))) throw GraphError("bridges_of_cycle: not a simple cycle");
    seen |= bit(v);
    if (!g.has_edge(v, cycle[(i + 1) % len])) throw GraphError("bridges_of_cycle: consecutive cycle vertices not adjacent");
  }
}

// Path through a bridge between two of its legs.
Path through_bridge(const Graph& g, const BridgeRecord& b, int from, int to) {
  if (b.kind == BridgeRecord::Kind::Chord) return {from, to};
  std::array<int, Graph::kMaxVertices> prev;
  prev.fill(-2);
  std::vector<int> queue;
  for_each_vertex(g.neighbors(from) & b.interior, [&](int w) {
    prev[w] = from;
    queue.push_back(w);
  });
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    if (g.has_edge(v, to)) {
      Path p{to};
      for (int w = v; w != from; w = prev[w]) p.push_back(w);
      p.push_back(from);
      std::reverse(p.begin(), p.end());
      return p;
    }
    for_each_vertex(g.neighbors(v) & b.interior, [&](int w) {
      if (prev[w] == -2) {
        prev[w] = v;
        queue.push_back(w);
      }
    });
  }
  throw std::logic_error("through_bridge: legs not joined inside bridge");
}

Path join(std::initializer_list<Path> parts) {
  Path out;
  for (const Path& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i == 0 && !out.empty() && out.back() == p[0]) continue;
      out.push_back(p[i]);
    }
  }
  return out;
}

Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

VertexSet interior_of(const Path& p) {
  VertexSet s = 0;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) s |= bit(p[i]);
  return s;
}

// Branch sets of a K3,3- model from a K4 subdivision with terminals t0..t3.
// paths[i][j] (i < j) runs from t_i to t_j; x is interior to the t1-t3 path,
// y to the t0-t2 path.
std::optional<MinorModel> k33_minus_from_k4(const Graph& g, const std::array<int, 4>& t,
                                            const std::array<std::array<Path, 4>, 4>& paths, int x, int y) {
  std::array<VertexSet, 4> side{};
  for (int i = 0; i < 4; ++i) side[i] = bit(t[i]);
  for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}}) side[i] |= interior_of(paths[i][j]);
  auto split_at = [&](const Path& p, int special, int lo, int hi) {
    const auto it = std::find(p.begin(), p.end(), special);
    if (it == p.begin() || it == p.end() || it + 1 == p.end()) return false;
    for (auto jt = p.begin() + 1; jt != it; ++jt) side[lo] |= bit(*jt);
    for (auto jt = it + 1; jt + 1 != p.end(); ++jt) side[hi] |= bit(*jt);
    return true;
  };
  if (!split_at(paths[1][3], x, 1, 3) || !split_at(paths[0][2], y, 0, 2)) return std::nullopt;
  MinorModel m{k33_minus(), g, {bit(x), side[0], side[2], bit(y), side[1], side[3]}};
  if (!verify_minor_model(m)) return std::nullopt;
  return m;
}

std::optional<Certificate> make_certificate(ReducedKuratowski target, CertificateCase c, std::optional<MinorModel> m,
                                            std::span<const int> cycle) {
  if (!m || !verify_minor_model(*m)) return std::nullopt;
  return Certificate{target, std::move(*m), c, Cycle(cycle.begin(), cycle.end())};
}

std::optional<MinorModel> k5_minus_model(const Graph& g, std::array<VertexSet, 5> sets) {
  MinorModel m{k5_minus(), g, {sets.begin(), sets.end()}};
  if (!verify_minor_model(m)) return std::nullopt;
  return m;
}

VertexSet arc_set(const Frame& f, bool first) {
  VertexSet s = 0;
  for (int r = 1; r < f.len; ++r) {
    if (r == f.ry) continue;
    if ((r < f.ry) == first) s |= bit(f.at(r));
  }
  return s;
}


int first_leg(const BridgeRecord& b, const Frame& f) {
  return *std::min_element(b.legs.begin(), b.legs.end(), [&](int p, int q) { return f.rel(p) < f.rel(q); });
}

int last_leg(const BridgeRecord& b, const Frame& f) {
  return *std::max_element(b.legs.begin(), b.legs.end(), [&](int p, int q) { return f.rel(p) < f.rel(q); });
}

// K4 subdivision through a chain B1..B2k of arc bridges (k >= 1). Terminals
// d_y, c_x, a_2k, b_2k-1; x sits on the c_x..b_2k-1 path, y on d_y..a_2k.
std::optional<MinorModel> case4_chain(const Graph& g, const Frame& f, const BridgeRecord& bx, const Sextet& sx,
                                      const BridgeRecord& by, const Sextet& sy, const std::vector<BridgeRecord>& chain) {
  const int k2 = static_cast<int>(chain.size());
  std::vector<int> a(k2 + 1), b(k2 + 1);
  for (int i = 1; i <= k2; ++i) {
    a[i] = first_leg(chain[i - 1], f);
    b[i] = last_leg(chain[i - 1], f);
  }
  const int cx = sx.c().vertex, bxv = sx.b().vertex;
  const int ay = sy.a().vertex, dy = sy.d().vertex;
  if (!(f.rel(dy) < f.rel(cx))) return std::nullopt;

  const std::array<int, 4> t{dy, cx, a[k2], b[k2 - 1]};
  std::array<std::array<Path, 4>, 4> p;
  p[0][1] = f.arc(dy, cx);
  Path q12 = join({through_bridge(g, bx, cx, bxv), f.arc(bxv, a[2])});
  for (int i = 1; i < k2 / 2; ++i)
    q12 = join({q12, through_bridge(g, chain[2 * i - 1], a[2 * i], b[2 * i]), f.arc(b[2 * i], a[2 * i + 2])});
  p[1][2] = q12;
  p[2][3] = f.arc(a[k2], b[k2 - 1]);
  p[0][3] = reversed(join({f.arc(b[k2 - 1], ay), through_bridge(g, by, ay, dy)}));
  Path q13 = join({f.arc(cx, a[1]), through_bridge(g, chain[0], a[1], b[1])});
  for (int i = 3; i < k2; i += 2) q13 = join({q13, f.arc(b[i - 2], a[i]), through_bridge(g, chain[i - 1], a[i], b[i])});
  p[1][3] = q13;
  p[0][2] = join({f.arc_back(dy, f.y), f.arc_back(f.y, b[k2]), through_bridge(g, chain[k2 - 1], b[k2], a[k2])});
  return k33_minus_from_k4(g, t, p, f.x, f.y);
}

// Directly conflicting pair: legs w0 < w1 < w2 < w3 alternating between the
// two bridges, with x before w0 and y strictly between w1 and w2, give a
// hexagon with crossing chords.
std::optional<MinorModel> case4_direct(const Graph& g, const Frame& f, const BridgeRecord& bx, const BridgeRecord& by) {
  for (const auto& [even, odd] : {std::pair{&bx, &by}, {&by, &bx}}) {
    for (int w0 : even->legs) {
      for (int w2 : even->legs) {
        if (w0 == f.x || f.rel(w0) >= f.rel(w2) || f.rel(w2) <= f.ry) continue;
        for (int w1 : odd->legs) {
          if (!(f.rel(w0) < f.rel(w1) && f.rel(w1) < f.ry)) continue;
          for (int w3 : odd->legs) {
            if (f.rel(w3) <= f.rel(w2)) continue;
            const std::array<int, 4> t{w1, w3, w2, w0};
            std::array<std::array<Path, 4>, 4> p;
            p[0][1] = through_bridge(g, *odd, w1, w3);
            p[1][2] = f.arc_back(w3, w2);
            p[2][3] = through_bridge(g, *even, w2, w0);
            p[0][3] = f.arc_back(w1, w0);
            p[1][3] = f.arc(w3, w0);
            p[0][2] = f.arc(w1, w2);
            if (auto m = k33_minus_from_k4(g, t, p, f.x, f.y)) return m;
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_t(const SextetSlot& s) { return s.tag == SextetSlot::Tag::T; }

}  // namespace

std::vector<BridgeRecord> bridges_of_cycle(const Graph& g, std::span<const int> cycle) {
  validate_cycle(g, cycle);
  const int len = static_cast<int>(cycle.size());
  std::array<int, Graph::kMaxVertices> index;
  index.fill(-1);
  VertexSet on_cycle = 0;
  for (int i = 0; i < len; ++i) {
    index[cycle[i]] = i;
    on_cycle |= bit(cycle[i]);
  }
  auto by_index = [&](int p, int q) { return index[p] < index[q]; };

  std::vector<BridgeRecord> out;
  for (const Edge& e : g.edges()) {
    if (index[e.u] < 0 || index[e.v] < 0) continue;
    const int d = std::abs(index[e.u] - index[e.v]);
    if (d == 1 || d == len - 1) continue;
    BridgeRecord b;
    b.kind = BridgeRecord::Kind::Chord;
    b.legs = {e.u, e.v};
    std::sort(b.legs.begin(), b.legs.end(), by_index);
    b.edges = {e};
    out.push_back(std::move(b));
  }
  VertexSet rest = g.all_vertices() & ~on_cycle;
  while (rest) {
    VertexSet comp = bit(std::countr_zero(rest));
    for (VertexSet grown = comp;; comp = grown) {
      for_each_vertex(comp, [&](int v) { grown |= g.neighbors(v) & rest; });
      if (grown == comp) break;
    }
    rest &= ~comp;
    BridgeRecord b;
    b.kind = BridgeRecord::Kind::Proper;
    b.interior = comp;
    VertexSet legs = 0;
    for_each_vertex(comp, [&](int v) { legs |= g.neighbors(v) & on_cycle; });
    for_each_vertex(legs, [&](int v) { b.legs.push_back(v); });
    std::sort(b.legs.begin(), b.legs.end(), by_index);
    for (const Edge& e : g.edges()) {
      if ((comp & bit(e.u)) || (comp & bit(e.v))) b.edges.push_back(e);
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::string SextetSlot::to_string() const {
  switch (tag) {
    case Tag::T: return "T";
    case Tag::F: return "F";
    case Tag::Vertex: return std::to_string(vertex);
  }
  return "?";
}

std::string Sextet::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < slots.size(); ++i) s += (i ? "," : "") + slots[i].to_string();
  return s + "]";
}

Sextet sextet_of(const BridgeRecord& bridge, std::span<const int> cycle, int x, int y) {
  const Frame f(cycle, x, y);
  Sextet s;
  const VertexSet legs = bridge.leg_set();
  s.slots[0] = (legs & bit(x)) ? SextetSlot::t() : SextetSlot::f();
  s.slots[3] = (legs & bit(y)) ? SextetSlot::t() : SextetSlot::f();
  int a = -1, b = -1, c = -1, d = -1;
  for (int v : bridge.legs) {
    if (f.index[v] < 0) throw GraphError("sextet_of: leg off the cycle");
    if (f.in_a1(v)) {
      if (a < 0 || f.rel(v) < f.rel(a)) a = v;
      if (b < 0 || f.rel(v) > f.rel(b)) b = v;
    } else if (f.in_a2(v)) {
      if (c < 0 || f.rel(v) < f.rel(c)) c = v;
      if (d < 0 || f.rel(v) > f.rel(d)) d = v;
    }
  }
  auto slot = [](int v) { return v < 0 ? SextetSlot::f() : SextetSlot::at(v); };
  s.slots[1] = slot(a);
  s.slots[2] = slot(b);
  s.slots[4] = slot(c);
  s.slots[5] = slot(d);
  return s;
}

bool screens(const Sextet& s) { return s.a().is_vertex() && s.b().is_vertex() && s.c().is_vertex() && s.d().is_vertex(); }

bool one_side_placeable(const BridgeRecord& bx, const BridgeRecord& by, std::span<const int> cycle, int x, int y) {
  if (!screens(sextet_of(bx, cycle, x, y)) || !screens(sextet_of(by, cycle, x, y)))
    throw GraphError("one_side_placeable: both bridges must screen x from y");
  const Frame f(cycle, x, y);
  const VertexSet lx = bx.leg_set(), ly = by.leg_set();
  if (std::popcount(lx & ly) >= 3) return false;
  // Interleaving: two legs of bx separate two legs of by not among them.
  for (std::size_t i = 0; i < bx.legs.size(); ++i) {
    for (std::size_t j = i + 1; j < bx.legs.size(); ++j) {
      const int lo = f.index[bx.legs[i]], hi = f.index[bx.legs[j]];
      bool inside = false, outside = false;
      for (int w : by.legs) {
        const int p = f.index[w];
        if (p == lo || p == hi) continue;
        (p > lo && p < hi ? inside : outside) = true;
      }
      if (inside && outside) return false;
    }
  }
  return true;
}

std::optional<std::vector<BridgeRecord>> find_alternating_chain(const std::vector<BridgeRecord>& bridges,
                                                                const BridgeRecord& bx, const BridgeRecord& by,
                                                                std::span<const int> cycle, int x, int y) {
  if (bx == by) return std::nullopt;
  if (!one_side_placeable(bx, by, cycle, x, y)) return std::vector<BridgeRecord>{};
  const Frame f(cycle, x, y);
  const int bxv = sextet_of(bx, cycle, x, y).b().vertex;
  const int ayv = sextet_of(by, cycle, x, y).a().vertex;

  std::vector<const BridgeRecord*> pool;
  for (const BridgeRecord& b : bridges) {
    if (b == bx || b == by) continue;
    if (std::all_of(b.legs.begin(), b.legs.end(), [&](int v) { return f.in_a1(v); })) pool.push_back(&b);
  }

  std::vector<const BridgeRecord*> chosen;
  std::vector<bool> used(pool.size(), false);
  // State after i bridges is (b_{i-1}, b_i). B_{i+1} needs
  // b_{i-1} <= a_{i+1} < b_i; the first needs only a_1 < b_x.
  std::function<bool(std::size_t, int, int)> extend = [&](std::size_t target, int prev_b, int last_b) -> bool {
    if (chosen.size() == target) {
      return f.rel(prev_b) <= f.rel(ayv) && f.rel(ayv) < f.rel(last_b);
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      const int ai = f.rel(first_leg(*pool[i], f));
      const int bi = last_leg(*pool[i], f);
      if (chosen.empty()) {
        if (!(ai < f.rel(bxv))) continue;
      } else if (!(f.rel(prev_b) <= ai && ai < f.rel(last_b))) {
        continue;
      }
      used[i] = true;
      chosen.push_back(pool[i]);
      const bool ok = chosen.size() == 1 ? extend(target, bxv, bi) : extend(target, last_b, bi);
      if (ok) return true;
      chosen.pop_back();
      used[i] = false;
    }
    return false;
  };
  for (std::size_t k2 = 2; k2 <= pool.size(); k2 += 2) {
    chosen.clear();
    std::fill(used.begin(), used.end(), false);
    if (extend(k2, bxv, bxv)) {
      std::vector<BridgeRecord> out;
      for (const auto* b : chosen) out.push_back(*b);
      return out;
    }
  }
  return std::nullopt;
}

std::string to_string(ReducedKuratowski target) {
  return target == ReducedKuratowski::K5Minus ? "K5minus" : "K33minus";
}

std::string to_string(CertificateCase c) {
  switch (c) {
    case CertificateCase::Case1: return "case1";
    case CertificateCase::Case2: return "case2";
    case CertificateCase::Case4: return "case4";
    case CertificateCase::Fallback: return "fallback";
  }
  return "?";
}

std::string Certificate::to_text() const {
  std::ostringstream os;
  os << "target: " << to_string(target) << '\n' << "case: " << to_string(case_used) << '\n';
  if (!cycle.empty()) {
    os << "cycle:";
    for (int v : cycle) os << ' ' << v;
    os << '\n';
  }
  os << model.to_text();
  return os.str();
}

std::optional<Certificate> certificate_from_cycle(const Graph& g, std::span<const int> cycle, int x, int y) {
  const Frame f(cycle, x, y);
  const std::vector<BridgeRecord> all = bridges_of_cycle(g, cycle);
  std::vector<const BridgeRecord*> screening;
  std::vector<Sextet> sextets;
  for (const BridgeRecord& b : all) {
    Sextet s = sextet_of(b, cycle, x, y);
    if (!screens(s)) continue;
    screening.push_back(&b);
    sextets.push_back(s);
  }
  const VertexSet a1 = arc_set(f, true), a2 = arc_set(f, false);
  const std::size_t ns = screening.size();

  // Case 1: a screening bridge at both x and y plus any second screening bridge.
  for (std::size_t i = 0; i < ns; ++i) {
    if (!is_t(sextets[i].x()) || !is_t(sextets[i].y())) continue;
    for (std::size_t j = 0; j < ns; ++j) {
      if (j == i) continue;
      auto m = k5_minus_model(g, {bit(x), bit(y), screening[i]->interior, a1 | screening[j]->interior, a2});
      if (auto c = make_certificate(ReducedKuratowski::K5Minus, CertificateCase::Case1, m, cycle)) return c;
    }
  }
  // Case 2: two screening bridges sharing the leg x (or y).
  for (int side = 0; side < 2; ++side) {
    const int s = side == 0 ? x : y;
    const int other = side == 0 ? y : x;
    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t j = i + 1; j < ns; ++j) {
        const bool at_i = side == 0 ? is_t(sextets[i].x()) : is_t(sextets[i].y());
        const bool at_j = side == 0 ? is_t(sextets[j].x()) : is_t(sextets[j].y());
        if (!at_i || !at_j) continue;
        auto m = k5_minus_model(g, {screening[i]->interior, screening[j]->interior, bit(s), a1 | bit(other), a2});
        if (auto c = make_certificate(ReducedKuratowski::K5Minus, CertificateCase::Case2, m, cycle)) return c;
      }
    }
  }
  // Case 4: screening bridges forced to opposite sides.
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < ns; ++j) {
      if (j == i) continue;
      const auto chain = find_alternating_chain(all, *screening[i], *screening[j], cycle, x, y);
      if (!chain) continue;
      std::optional<MinorModel> m = chain->empty() ? case4_direct(g, f, *screening[i], *screening[j])
                                                   : case4_chain(g, f, *screening[i], sextets[i], *screening[j], sextets[j], *chain);
      if (auto c = make_certificate(ReducedKuratowski::K33Minus, CertificateCase::Case4, m, cycle)) return c;
    }
  }
  return std::nullopt;
}

std::vector<Cycle> cycles_through(const Graph& g, int x, int y, std::size_t limit) {
  std::vector<Cycle> found;
  if (x == y || x < 0 || y < 0 || x >= g.order() || y >= g.order()) return found;
  // Paths from x to y, closed by a second internally disjoint x-y path.
  constexpr std::size_t kPathLimit = 1 << 16;
  std::vector<Cycle> paths;
  Path cur{x};
  VertexSet used = bit(x);
  std::function<void()> walk = [&] {
    const int v = cur.back();
    if (paths.size() >= kPathLimit) return;
    if (v == y) {
      paths.push_back(cur);
      return;
    }
    for_each_vertex(g.neighbors(v) & ~used, [&](int w) {
      cur.push_back(w);
      used |= bit(w);
      walk();
      used &= ~bit(w);
      cur.pop_back();
    });
  };
  walk();
  std::stable_sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i < paths.size() && found.size() < limit; ++i) {
    VertexSet in_i = 0;
    for (int v : paths[i]) in_i |= bit(v);
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      VertexSet in_j = 0;
      for (std::size_t k = 1; k + 1 < paths[j].size(); ++k) in_j |= bit(paths[j][k]);
      if (in_i & in_j) continue;
      if (paths[i].size() == 2 && paths[j].size() == 2) continue;
      Cycle c = paths[i];
      for (std::size_t k = paths[j].size() - 1; k-- > 1;) c.push_back(paths[j][k]);
      if (c.size() < 3) continue;
      found.push_back(std::move(c));
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Cycle& a, const Cycle& b) { return a.size() < b.size(); });
  if (found.size() > limit) found.resize(limit);
  return found;
}

Certificate extract_certificate(const Graph& g, int x, int y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || x == y) throw GraphError("extract_certificate: bad vertex pair");
  if (g.has_edge(x, y)) throw GraphError("extract_certificate: x and y must be non-adjacent");
  if (!is_2_connected(g)) throw GraphError("extract_certificate: graph must be 2-connected");
  if (is_planar_fast(add_edge(g, Edge(x, y)))) throw GraphError("extract_certificate: adding xy keeps the graph planar");

  constexpr std::size_t kCycleLimit = 4096;
  for (const Cycle& c : cycles_through(g, x, y, kCycleLimit)) {
    const Cycle back(c.rbegin(), c.rend());
    for (const Cycle* cyc : {&c, &back}) {
      for (auto [s, t] : {std::pair{x, y}, {y, x}}) {
        if (auto cert = certificate_from_cycle(g, *cyc, s, t)) return *cert;
      }
    }
  }
  if (auto m = find_minor_model(g, k5_minus())) return Certificate{ReducedKuratowski::K5Minus, std::move(*m), CertificateCase::Fallback, {}};
  if (auto m = find_minor_model(g, k33_minus())) return Certificate{ReducedKuratowski::K33Minus, std::move(*m), CertificateCase::Fallback, {}};
  throw std::logic_error("extract_certificate: no reduced Kuratowski minor found");
}

}  // namespace fm
