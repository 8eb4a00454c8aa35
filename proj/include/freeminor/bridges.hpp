#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freeminor/graph.hpp"
#include "freeminor/minor.hpp"

namespace fm {

using Cycle = std::vector<int>;  // vertex sequence; its order is "clockwise"

/// A chord of a cycle, or a component of G - V(C) with its attachment edges.
struct BridgeRecord {
  enum class Kind { Chord, Proper };

  Kind kind = Kind::Chord;
  VertexSet interior = 0;  // empty for chords
  std::vector<int> legs;   // attachment vertices in cycle order
  std::vector<Edge> edges;

  VertexSet leg_set() const;
  bool operator==(const BridgeRecord&) const = default;
};

/// Every edge off the cycle belongs to exactly one returned bridge. Throws
/// GraphError when `cycle` is not a simple cycle of g.
std::vector<BridgeRecord> bridges_of_cycle(const Graph& g, std::span<const int> cycle);

struct SextetSlot {
  enum class Tag { T, F, Vertex };
  Tag tag = Tag::F;
  int vertex = -1;

  static SextetSlot t() { return {Tag::T, -1}; }
  static SextetSlot f() { return {Tag::F, -1}; }
  static SextetSlot at(int v) { return {Tag::Vertex, v}; }
  bool is_vertex() const { return tag == Tag::Vertex; }
  bool operator==(const SextetSlot&) const = default;
  std::string to_string() const;
};

/// Bridge descriptor [x, a, b, y, c, d] relative to a cycle and two of its
/// vertices. x and y are T when they are legs. a and b are the legs nearest
/// to x and to y on the clockwise arc from x to y; c and d are the legs
/// nearest to y and to x on the arc from y back to x. Empty arcs give F.
struct Sextet {
  std::array<SextetSlot, 6> slots;

  const SextetSlot& x() const { return slots[0]; }
  const SextetSlot& a() const { return slots[1]; }
  const SextetSlot& b() const { return slots[2]; }
  const SextetSlot& y() const { return slots[3]; }
  const SextetSlot& c() const { return slots[4]; }
  const SextetSlot& d() const { return slots[5]; }

  bool operator==(const Sextet&) const = default;
  std::string to_string() const;  // e.g. "[F,3,3,F,7,7]"
};

Sextet sextet_of(const BridgeRecord& bridge, std::span<const int> cycle, int x, int y);

/// A bridge screens x from y iff a, b, c and d are all vertices.
bool screens(const Sextet& s);

/// Whether two bridges screening x from y fit on the same side of the cycle:
/// they share at most two legs and their legs do not interleave. Throws
/// GraphError when either bridge does not screen.
bool one_side_placeable(const BridgeRecord& bx, const BridgeRecord& by, std::span<const int> cycle, int x, int y);

/// Chain of non-screening bridges B1..B2k, all attached strictly inside the
/// clockwise arc x..y, whose legs satisfy
///   a1 < b_x <= a2 < b1 <= a3 < b2 <= ... <= a2k < b2k-1 <= a_y < b2k
/// along that arc, so that bx and by are forced to opposite sides. An empty
/// chain means bx and by conflict directly. Absent when bx == by or no chain
/// exists. Shortest chains are found first.
std::optional<std::vector<BridgeRecord>> find_alternating_chain(const std::vector<BridgeRecord>& bridges,
                                                                const BridgeRecord& bx, const BridgeRecord& by,
                                                                std::span<const int> cycle, int x, int y);

enum class ReducedKuratowski { K5Minus, K33Minus };
enum class CertificateCase { Case1, Case2, Case4, Fallback };

std::string to_string(ReducedKuratowski target);
std::string to_string(CertificateCase c);

struct Certificate {
  ReducedKuratowski target = ReducedKuratowski::K5Minus;
  MinorModel model;
  CertificateCase case_used = CertificateCase::Fallback;
  Cycle cycle;  // the cycle the case recipe used; empty for Fallback

  std::string to_text() const;
};

/// Applies the case recipes to one cycle through x and y. Each candidate
/// model is verified before it is returned.
std::optional<Certificate> certificate_from_cycle(const Graph& g, std::span<const int> cycle, int x, int y);

/// Simple cycles of g through both x and y, shortest first, one traversal
/// direction each, at most `limit` of them.
std::vector<Cycle> cycles_through(const Graph& g, int x, int y, std::size_t limit);

/// Requires g 2-connected, xy a non-edge and g + xy nonplanar (GraphError
/// otherwise). Tries the case recipes on cycles through x and y in both
/// orientations, then falls back to a direct minor search.
Certificate extract_certificate(const Graph& g, int x, int y);

}  // namespace fm
