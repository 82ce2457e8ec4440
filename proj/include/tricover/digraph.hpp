#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace tricover {

/// Dense 0-based vertex index.
using VertexId = int;

/// One copy of a (possibly parallel) arc, identified by tail, head and a
/// copy index below the multiplicity of the (tail, head) pair. Slots are
/// the unit of disjointness and of deletion throughout the library.
struct ArcSlot {
  VertexId tail = 0;
  VertexId head = 0;
  int copy = 0;

  friend auto operator<=>(const ArcSlot&, const ArcSlot&) = default;
};

std::string to_string(const ArcSlot& s);

/// A directed 3-cycle on three distinct vertices, stored as the three arc
/// slots chained head-to-tail. Canonical rotation: slots[0].tail is the
/// smallest vertex of the cycle, which makes the representation unique and
/// gives triangles set semantics.
struct Triangle {
  std::array<ArcSlot, 3> slots{};

  /// Builds a triangle from three slots forming a directed cycle; rotates
  /// into canonical form. Throws std::invalid_argument if the slots do not
  /// chain cyclically over three distinct vertices.
  static Triangle from_cycle(const ArcSlot& a, const ArcSlot& b, const ArcSlot& c);

  std::array<VertexId, 3> vertices() const {
    return {slots[0].tail, slots[1].tail, slots[2].tail};
  }
  bool contains_vertex(VertexId v) const;
  bool uses_slot(const ArcSlot& s) const;
  bool shares_slot(const Triangle& other) const;

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

std::string to_string(const Triangle& t);

/// Loop-free directed multigraph with integer arc multiplicities over
/// vertices 0..n-1. Digons (arcs in both directions between a pair) are
/// allowed; loops are not. Values are immutable once constructed: the
/// editing operations below return new graphs, so instances can be shared
/// freely across threads.
class DirectedMultigraph {
 public:
  DirectedMultigraph() = default;
  explicit DirectedMultigraph(int vertex_count);

  /// Builds a graph from (tail, head, multiplicity) triples, aggregating
  /// duplicates. Throws std::invalid_argument on loops, non-positive
  /// multiplicities or out-of-range vertices.
  static DirectedMultigraph from_arcs(
      int vertex_count, const std::vector<std::tuple<VertexId, VertexId, int>>& arcs);

  int vertex_count() const { return n_; }
  int multiplicity(VertexId u, VertexId v) const;
  bool has_slot(const ArcSlot& s) const;

  /// Total number of arc slots (sum of all multiplicities).
  int slot_count() const;

  /// All (tail, head, multiplicity) triples with positive multiplicity,
  /// lexicographic by (tail, head).
  std::vector<std::tuple<VertexId, VertexId, int>> arcs() const;

  friend bool operator==(const DirectedMultigraph&, const DirectedMultigraph&) = default;

 private:
  int n_ = 0;
  std::vector<int> mult_;  // row-major n x n

  int& at(VertexId u, VertexId v) { return mult_[static_cast<size_t>(u) * n_ + v]; }
  void check_vertex(VertexId v) const;

  friend DirectedMultigraph add_arc(const DirectedMultigraph&, VertexId, VertexId, int);
  friend struct SlotRemoval;
  friend struct VertexDeletion;
  friend SlotRemoval remove_slots(const DirectedMultigraph&, const std::vector<ArcSlot>&);
  friend VertexDeletion delete_vertex(const DirectedMultigraph&, VertexId);
};

/// Returns a copy of g with `count` extra copies of the arc u -> v.
/// Throws std::invalid_argument on loops (u == v), non-positive count or
/// out-of-range vertices.
DirectedMultigraph add_arc(const DirectedMultigraph& g, VertexId u, VertexId v, int count = 1);

/// Result of removing a set of arc slots. Surviving copies of each touched
/// pair are re-indexed densely, lowest original copies first; `to_original`
/// maps slots of the reduced graph back to slots of the source graph.
struct SlotRemoval {
  DirectedMultigraph graph;
  /// For each pair that lost copies: surviving original copy indices in
  /// ascending order (position = new copy index).
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> survivors;

  ArcSlot to_original(const ArcSlot& s) const;
  Triangle to_original(const Triangle& t) const;
};

/// Removes the given slots from g. Throws std::invalid_argument if any slot
/// does not exist (including a slot listed twice).
SlotRemoval remove_slots(const DirectedMultigraph& g, const std::vector<ArcSlot>& slots);

/// Result of deleting a vertex. Remaining vertices are re-indexed densely,
/// preserving relative order; both directions of the id map are recorded so
/// certificates can be translated back to the original graph.
struct VertexDeletion {
  DirectedMultigraph graph;
  std::vector<VertexId> old_of_new;
  std::vector<int> new_of_old;  // -1 for the deleted vertex

  ArcSlot to_original(const ArcSlot& s) const;
  Triangle to_original(const Triangle& t) const;
};

/// Deletes v and every arc incident to it. Throws std::invalid_argument on
/// an out-of-range vertex.
VertexDeletion delete_vertex(const DirectedMultigraph& g, VertexId v);

/// Every directed triangle of g, one per combination of arc copies, in
/// lexicographic order of the canonical slot triple. The list is
/// duplicate-free: the canonical rotation makes identities unique.
std::vector<Triangle> enumerate_triangles(const DirectedMultigraph& g);

/// The sub-list of enumerate_triangles(g) whose vertex set contains v.
std::vector<Triangle> triangles_through(const DirectedMultigraph& g, VertexId v);

/// True iff g contains at least one directed triangle (early exit, no
/// materialization).
bool has_triangle(const DirectedMultigraph& g);

/// Number of directed triangles counted with slot multiplicity, i.e. the sum
/// over cyclically oriented vertex triples of the product of the three side
/// multiplicities. Equals enumerate_triangles(g).size().
std::uint64_t triangle_count(const DirectedMultigraph& g);

/// Triangle count restricted to triangles whose vertex set contains v.
std::uint64_t triangle_count_through(const DirectedMultigraph& g, VertexId v);

}  // namespace tricover
