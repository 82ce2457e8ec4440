#pragma once

#include <compare>
#include <vector>

#include "tricover/digraph.hpp"

namespace tricover {

/// Source/sink network whose (s,t)-paths biject with the directed triangles
/// through a pivot vertex: a triangle z -> pivot -> u -> z corresponds to the
/// path s -> u+ -> z- -> t. A vertex that is both an out- and an in-neighbor
/// of the pivot gets two distinct nodes, one per side. All capacities equal
/// the corresponding arc multiplicities, so arc-disjointness carries over
/// copy for copy.
struct AuxiliaryNetwork {
  VertexId pivot = -1;
  std::vector<VertexId> out_vertices;  // sorted; u with mult(pivot, u) > 0
  std::vector<VertexId> in_vertices;   // sorted; z with mult(z, pivot) > 0
  std::vector<int> source_capacity;    // s -> u+, equals mult(pivot, u)
  std::vector<int> sink_capacity;      // z- -> t, equals mult(z, pivot)
  std::vector<std::vector<int>> middle_capacity;  // [i][j] = mult(out[i], in[j])
};

AuxiliaryNetwork build_auxiliary_network(const DirectedMultigraph& g, VertexId pivot);

enum class NetLayer { Source, Middle, Sink };

/// One copy of a network arc. out_index / in_index are positions in
/// out_vertices / in_vertices; Source arcs use only out_index, Sink arcs only
/// in_index.
struct NetSlot {
  NetLayer layer = NetLayer::Source;
  int out_index = -1;
  int in_index = -1;
  int copy = 0;

  friend auto operator<=>(const NetSlot&, const NetSlot&) = default;
};

/// An (s,t)-path s -> out[out_index]+ -> in[in_index]- -> t together with the
/// arc copies it occupies on each of its three layers.
struct FlowPath {
  int out_index = -1;
  int in_index = -1;
  int source_copy = 0;
  int middle_copy = 0;
  int sink_copy = 0;
};

/// A maximum family of arc-slot-disjoint (s,t)-paths and a matching minimum
/// (s,t)-arc-cut: |paths| == |cut| == value, no two paths share a network arc
/// slot, and removing the cut slots disconnects s from t.
struct FlowResult {
  int value = 0;
  std::vector<FlowPath> paths;
  std::vector<NetSlot> cut;
};

/// Integer max-flow by shortest augmenting paths, decomposed into paths by
/// repeatedly peeling the lexicographically least saturated s -> u+ -> z- -> t
/// path; the cut is read off residual reachability from s. Deterministic for
/// a given network.
FlowResult max_disjoint_paths(const AuxiliaryNetwork& net);

/// The flow result translated back to the source graph for a pivot.
struct PivotDecomposition {
  /// Pairwise slot-disjoint triangles through the pivot, one per path.
  std::vector<Triangle> triangles;
  /// Per triangle (same order), its one arc not incident to the pivot.
  std::vector<ArcSlot> opposite_arcs;
  /// Cut slots in graph terms; every triangle through the pivot uses at
  /// least one of them.
  std::vector<ArcSlot> cut_arcs;
};

/// Translates a FlowResult of build_auxiliary_network(g, pivot) back to
/// triangles and arc slots of g. Throws std::invalid_argument when the
/// network or result is inconsistent with (g, pivot).
PivotDecomposition map_back(const DirectedMultigraph& g, VertexId pivot,
                            const AuxiliaryNetwork& net, const FlowResult& res);

}  // namespace tricover
