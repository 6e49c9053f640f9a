#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ckrgap/rational.hpp"

namespace ckrgap {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Coordinate, terminal and label indices are 1-based everywhere in the public
// API, matching the usual [k] = {1..k} convention. Arrays of coordinates are
// plain 0-based spans.

/// A point of the discretized simplex, stored as k non-negative integers
/// (simplex coordinate times n) that sum to n.
struct LatticePoint {
  std::vector<int> coords;
  int n = 0;

  LatticePoint() = default;
  LatticePoint(std::vector<int> coords, int n);

  int k() const noexcept { return static_cast<int>(coords.size()); }
  /// Bit (i-1) is set iff coordinate i is positive.
  unsigned support_mask() const noexcept;
  bool operator==(const LatticePoint&) const = default;
};

/// Colexicographic comparison: the last differing coordinate decides.
bool colex_less(std::span<const int> a, std::span<const int> b) noexcept;

/// All compositions of n into k parts, in ascending colex order.
std::vector<LatticePoint> enumerate_points(int k, int n);

struct Edge {
  NodeId u;
  NodeId v;  // u < v
  // coords(v) = coords(u) + e_plus - e_minus (1-based indices)
  std::int8_t plus;
  std::int8_t minus;
};

struct Incidence {
  NodeId neighbor;
  EdgeId edge;
};

/// The graph on Delta_{k,n}: nodes are lattice points in colex order, edges
/// join points at integer L1 distance 2. Immutable once built.
class SimplexGraph {
 public:
  /// Shared, memoized instance for (k, n).
  static std::shared_ptr<const SimplexGraph> get(int k, int n);

  SimplexGraph(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const int> coords(NodeId v) const noexcept {
    return {coords_.data() + static_cast<std::size_t>(v) * k_, static_cast<std::size_t>(k_)};
  }
  /// Coordinate i (1-based) of node v.
  int coord(NodeId v, int i) const noexcept { return coords_[static_cast<std::size_t>(v) * k_ + i - 1]; }
  LatticePoint point(NodeId v) const;
  unsigned support_mask(NodeId v) const noexcept { return support_[v]; }
  int support_size(NodeId v) const noexcept;
  bool in_support(NodeId v, int i) const noexcept { return (support_[v] >> (i - 1)) & 1u; }

  std::optional<NodeId> find(std::span<const int> coords) const;
  NodeId index_of(std::span<const int> coords) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const noexcept { return edges_[e]; }
  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;

  std::span<const Incidence> incident(NodeId v) const noexcept {
    return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  /// Terminal s_i = e^i, 1-based.
  NodeId terminal(int i) const noexcept { return terminals_[static_cast<std::size_t>(i - 1)]; }
  /// i when v = s_i, otherwise 0.
  int terminal_index(NodeId v) const noexcept;

 private:
  std::uint64_t key(std::span<const int> coords) const;

  int k_;
  int n_;
  std::size_t node_count_;
  std::vector<int> coords_;
  std::vector<unsigned> support_;
  std::unordered_map<std::uint64_t, NodeId> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidence_;
  std::vector<NodeId> terminals_;
};

using GraphPtr = std::shared_ptr<const SimplexGraph>;

struct NodeEdgeSet {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
};

/// V_ij and L_ij. Nodes are ordered along the path from s_i to s_j and
/// edges[d-1] is the d-th edge counted from s_i.
NodeEdgeSet boundary_sets(const SimplexGraph& g, int i, int j);

/// The line of the face spanned by s_1, s_2, s_3 on which x_m = 1 - t/n,
/// m being the index in {1,2,3} other than i and j. t = n gives the boundary
/// V_ij, t = 0 the single corner e^m. Ordered from the x_i-maximal end.
NodeEdgeSet parallel_line(const SimplexGraph& g, int i, int j, int t);

struct RedCorner {
  std::vector<NodeId> u;        // x_4 = 0, x_i = 1 - c
  std::vector<NodeId> r;        // U_i plus the two boundary segments near s_i
  std::vector<NodeId> closure;  // x_4 = 0, x_i >= 1 - c
  std::vector<EdgeId> gamma;    // perimeter edges of Closure(R_i)
};

struct RedRegions {
  Rational c;
  std::array<RedCorner, 3> corners;

  std::size_t red_edge_count() const noexcept;
  bool is_red(EdgeId e) const;
};

/// Red regions near s_1, s_2, s_3 for 0 < c < 1/2 with c*n integral.
/// Defined on Delta_{4,n} (x_4 = 0 face); Delta_{3,n} is accepted too.
RedRegions red_regions(const SimplexGraph& g, const Rational& c);

/// True iff the edge set forms one simple cycle through exactly `nodes`.
bool is_simple_cycle(const SimplexGraph& g, std::span<const NodeId> nodes,
                     std::span<const EdgeId> edges);

/// Induced subgraph on nodes whose support lies in `indices` (1-based).
NodeEdgeSet face_subgraph(const SimplexGraph& g, std::span<const int> indices);

/// The face on `indices` re-expressed as the graph Delta_{|indices|,n};
/// `to_parent[v]` maps a face node to its node in g.
struct FaceGraph {
  GraphPtr graph;
  std::vector<NodeId> to_parent;
};

FaceGraph project_face(const SimplexGraph& g, std::span<const int> indices);

}  // namespace ckrgap
