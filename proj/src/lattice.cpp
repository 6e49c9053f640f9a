#include "ckrgap/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

namespace ckrgap {

LatticePoint::LatticePoint(std::vector<int> c, int n_) : coords(std::move(c)), n(n_) {
  if (coords.empty()) invalid_parameter("lattice point needs at least one coordinate");
  long sum = 0;
  for (int x : coords) {
    if (x < 0) invalid_parameter("negative lattice coordinate");
    sum += x;
  }
  if (sum != n) invalid_parameter("lattice coordinates must sum to n");
}

unsigned LatticePoint::support_mask() const noexcept {
  unsigned mask = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] > 0) mask |= 1u << i;
  }
  return mask;
}

bool colex_less(std::span<const int> a, std::span<const int> b) noexcept {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

void check_kn(int k, int n) {
  if (k < 2) invalid_parameter("k must be at least 2");
  if (n < 1) invalid_parameter("n must be at least 1");
}

// Fills positions [0, pos] given that positions above pos are fixed; the
// highest position varies slowest, which yields ascending colex order.
template <class Visit>
void compositions(std::vector<int>& buf, int pos, int remaining, Visit&& visit) {
  if (pos == 0) {
    buf[0] = remaining;
    visit(buf);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    buf[static_cast<std::size_t>(pos)] = v;
    compositions(buf, pos - 1, remaining - v, visit);
  }
}

}  // namespace

std::vector<LatticePoint> enumerate_points(int k, int n) {
  check_kn(k, n);
  std::vector<LatticePoint> out;
  std::vector<int> buf(static_cast<std::size_t>(k));
  compositions(buf, k - 1, n, [&](const std::vector<int>& p) { out.emplace_back(p, n); });
  return out;
}

std::shared_ptr<const SimplexGraph> SimplexGraph::get(int k, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const SimplexGraph>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{k, n}];
  if (!slot) slot = std::make_shared<const SimplexGraph>(k, n);
  return slot;
}

SimplexGraph::SimplexGraph(int k, int n) : k_(k), n_(n), node_count_(0) {
  check_kn(k, n);
  // key() packs coordinates base (n+1); make sure that fits.
  long double cap = 1;
  for (int i = 0; i < k; ++i) cap *= (n + 1);
  if (cap >= 18446744073709551615.0L) invalid_parameter("simplex graph too large to index");

  std::vector<int> buf(static_cast<std::size_t>(k));
  compositions(buf, k - 1, n, [&](const std::vector<int>& p) {
    coords_.insert(coords_.end(), p.begin(), p.end());
    unsigned mask = 0;
    for (int i = 0; i < k; ++i) {
      if (p[static_cast<std::size_t>(i)] > 0) mask |= 1u << i;
    }
    support_.push_back(mask);
    index_.emplace(key(p), static_cast<NodeId>(node_count_));
    ++node_count_;
  });

  std::vector<int> y(static_cast<std::size_t>(k));
  for (NodeId u = 0; u < node_count_; ++u) {
    auto x = coords(u);
    for (int plus = 1; plus <= k; ++plus) {
      for (int minus = 1; minus <= k; ++minus) {
        if (plus == minus || x[static_cast<std::size_t>(minus - 1)] == 0) continue;
        std::copy(x.begin(), x.end(), y.begin());
        ++y[static_cast<std::size_t>(plus - 1)];
        --y[static_cast<std::size_t>(minus - 1)];
        NodeId v = index_.at(key(y));
        if (v > u) {
          edges_.push_back(Edge{u, v, static_cast<std::int8_t>(plus), static_cast<std::int8_t>(minus)});
        }
      }
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });

  offsets_.assign(node_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidence_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  edge_index_.reserve(edges_.size());
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    incidence_[fill[e.u]++] = Incidence{e.v, id};
    incidence_[fill[e.v]++] = Incidence{e.u, id};
    edge_index_.emplace(static_cast<std::uint64_t>(e.u) << 32 | e.v, id);
  }

  for (int i = 1; i <= k; ++i) {
    std::fill(y.begin(), y.end(), 0);
    y[static_cast<std::size_t>(i - 1)] = n;
    terminals_.push_back(index_.at(key(y)));
  }
}

std::uint64_t SimplexGraph::key(std::span<const int> c) const {
  std::uint64_t out = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    out = out * static_cast<std::uint64_t>(n_ + 1) + static_cast<std::uint64_t>(c[i]);
  }
  return out;
}

LatticePoint SimplexGraph::point(NodeId v) const {
  auto c = coords(v);
  return LatticePoint(std::vector<int>(c.begin(), c.end()), n_);
}

int SimplexGraph::support_size(NodeId v) const noexcept { return std::popcount(support_[v]); }

std::optional<NodeId> SimplexGraph::find(std::span<const int> c) const {
  if (static_cast<int>(c.size()) != k_) return std::nullopt;
  long sum = 0;
  for (int x : c) {
    if (x < 0 || x > n_) return std::nullopt;
    sum += x;
  }
  if (sum != n_) return std::nullopt;
  auto it = index_.find(key(c));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId SimplexGraph::index_of(std::span<const int> c) const {
  auto id = find(c);
  if (!id) invalid_parameter("point is not on the simplex lattice");
  return *id;
}

std::optional<EdgeId> SimplexGraph::find_edge(NodeId a, NodeId b) const {
  if (a > b) std::swap(a, b);
  auto it = edge_index_.find(static_cast<std::uint64_t>(a) << 32 | b);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

int SimplexGraph::terminal_index(NodeId v) const noexcept {
  for (std::size_t i = 0; i < terminals_.size(); ++i) {
    if (terminals_[i] == v) return static_cast<int>(i) + 1;
  }
  return 0;
}

namespace {

void check_index(const SimplexGraph& g, int i, const char* what) {
  if (i < 1 || i > g.k()) invalid_parameter(std::string(what) + " index out of range");
}

// Nodes of g whose support lies in `mask`, sorted by x_a descending (which
// walks a segment from the a-end), together with the induced edges in that
// order.
NodeEdgeSet ordered_segment(const SimplexGraph& g, std::vector<NodeId> nodes, int a) {
  std::sort(nodes.begin(), nodes.end(),
            [&](NodeId p, NodeId q) { return g.coord(p, a) > g.coord(q, a); });
  NodeEdgeSet out;
  out.nodes = std::move(nodes);
  for (std::size_t s = 0; s + 1 < out.nodes.size(); ++s) {
    auto e = g.find_edge(out.nodes[s], out.nodes[s + 1]);
    if (!e) throw Error("internal", "segment nodes are not consecutive");
    out.edges.push_back(*e);
  }
  return out;
}

}  // namespace

NodeEdgeSet boundary_sets(const SimplexGraph& g, int i, int j) {
  check_index(g, i, "boundary");
  check_index(g, j, "boundary");
  if (i == j) invalid_parameter("boundary_sets needs distinct indices");
  unsigned mask = (1u << (i - 1)) | (1u << (j - 1));
  std::vector<NodeId> nodes;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if ((g.support_mask(v) & ~mask) == 0) nodes.push_back(v);
  }
  return ordered_segment(g, std::move(nodes), i);
}

NodeEdgeSet parallel_line(const SimplexGraph& g, int i, int j, int t) {
  if (g.k() < 3) invalid_parameter("parallel_line needs a 3-support face");
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) {
    invalid_parameter("parallel_line indices must be distinct elements of {1,2,3}");
  }
  if (t < 0 || t > g.n()) invalid_parameter("parallel_line offset t must lie in [0, n]");
  int m = 6 - i - j;
  std::vector<NodeId> nodes;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if ((g.support_mask(v) & ~7u) != 0) continue;
    if (g.coord(v, m) == g.n() - t) nodes.push_back(v);
  }
  return ordered_segment(g, std::move(nodes), i);
}

std::size_t RedRegions::red_edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& corner : corners) total += corner.gamma.size();
  return total;
}

bool RedRegions::is_red(EdgeId e) const {
  for (const auto& corner : corners) {
    if (std::binary_search(corner.gamma.begin(), corner.gamma.end(), e)) return true;
  }
  return false;
}

RedRegions red_regions(const SimplexGraph& g, const Rational& c) {
  if (g.k() != 3 && g.k() != 4) invalid_parameter("red regions are defined on Delta_{4,n}");
  if (c <= 0 || c >= Rational(1, 2)) invalid_parameter("c must lie in (0, 1/2)");
  Rational cn = c * g.n();
  if (cn.get_den() != 1) invalid_parameter("c*n must be an integer");
  const int level = g.n() - static_cast<int>(cn.get_num().get_si());  // n * (1 - c)

  RedRegions out;
  out.c = c;
  for (int corner = 1; corner <= 3; ++corner) {
    RedCorner& rc = out.corners[static_cast<std::size_t>(corner - 1)];
    const unsigned side_a = (1u << (corner - 1)) | (1u << (corner % 3));
    const unsigned side_b = (1u << (corner - 1)) | (1u << ((corner + 1) % 3));
    for (NodeId v = 0; v < g.node_count(); ++v) {
      unsigned mask = g.support_mask(v);
      if ((mask & ~7u) != 0) continue;  // x_4 = 0
      int x = g.coord(v, corner);
      if (x < level) continue;
      rc.closure.push_back(v);
      if (x == level) rc.u.push_back(v);
      bool on_side = (mask & ~side_a) == 0 || (mask & ~side_b) == 0;
      if (x == level || on_side) rc.r.push_back(v);
    }
    // Perimeter edges only: both ends on U_k or on one side V_ik, V_jk.
    auto same_side = [&](NodeId a, NodeId b) {
      if (g.coord(a, corner) == level && g.coord(b, corner) == level) return true;
      unsigned m = g.support_mask(a) | g.support_mask(b);
      return (m & ~side_a) == 0 || (m & ~side_b) == 0;
    };
    for (NodeId v : rc.r) {
      for (const Incidence& inc : g.incident(v)) {
        if (inc.neighbor > v && std::binary_search(rc.r.begin(), rc.r.end(), inc.neighbor) &&
            same_side(v, inc.neighbor)) {
          rc.gamma.push_back(inc.edge);
        }
      }
    }
    std::sort(rc.gamma.begin(), rc.gamma.end());
  }
  return out;
}

bool is_simple_cycle(const SimplexGraph& g, std::span<const NodeId> nodes,
                     std::span<const EdgeId> edges) {
  if (nodes.size() < 3 || nodes.size() != edges.size()) return false;
  std::unordered_map<NodeId, std::vector<NodeId>> adj;
  for (NodeId v : nodes) adj[v];
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    if (!adj.count(e.u) || !adj.count(e.v)) return false;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const auto& [v, nb] : adj) {
    if (nb.size() != 2) return false;
  }
  // walk once around
  NodeId start = nodes.front(), prev = start, cur = adj[start][0];
  std::size_t steps = 1;
  while (cur != start) {
    const auto& nb = adj[cur];
    NodeId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (++steps > nodes.size()) return false;
  }
  return steps == nodes.size();
}

NodeEdgeSet face_subgraph(const SimplexGraph& g, std::span<const int> indices) {
  if (indices.empty()) invalid_parameter("face needs a non-empty index set");
  unsigned mask = 0;
  for (int i : indices) {
    check_index(g, i, "face");
    mask |= 1u << (i - 1);
  }
  NodeEdgeSet out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if ((g.support_mask(v) & ~mask) == 0) out.nodes.push_back(v);
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if ((g.support_mask(e.u) & ~mask) == 0 && (g.support_mask(e.v) & ~mask) == 0) {
      out.edges.push_back(id);
    }
  }
  return out;
}

FaceGraph project_face(const SimplexGraph& g, std::span<const int> indices) {
  if (indices.empty()) invalid_parameter("face needs a non-empty index set");
  if (indices.size() < 2) invalid_parameter("a projected face needs at least two indices");
  std::vector<int> idx(indices.begin(), indices.end());
  for (int i : idx) check_index(g, i, "face");
  FaceGraph out;
  out.graph = SimplexGraph::get(static_cast<int>(idx.size()), g.n());
  out.to_parent.resize(out.graph->node_count());
  std::vector<int> full(static_cast<std::size_t>(g.k()));
  for (NodeId v = 0; v < out.graph->node_count(); ++v) {
    std::fill(full.begin(), full.end(), 0);
    auto c = out.graph->coords(v);
    for (std::size_t s = 0; s < idx.size(); ++s) full[static_cast<std::size_t>(idx[s] - 1)] = c[s];
    out.to_parent[v] = g.index_of(full);
  }
  return out;
}

}  // namespace ckrgap
