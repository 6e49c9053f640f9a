#include "ckrgap/cuts.hpp"

#include <algorithm>
#include <deque>

namespace ckrgap {

CutLabeling::CutLabeling(GraphPtr graph, std::vector<Label> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (!graph_) invalid_parameter("cut needs a graph");
  if (labels_.size() != graph_->node_count()) invalid_parameter("cut labels must cover every node");
  const int k = graph_->k();
  for (Label l : labels_) {
    if (l < 1 || l > k + 1) invalid_parameter("cut label outside 1..k+1");
  }
  for (int i = 1; i <= k; ++i) {
    if (labels_[graph_->terminal(i)] != i) invalid_parameter("terminal s_i must carry label i");
  }
}

std::size_t CutLabeling::count(Label l) const noexcept {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), l));
}

bool CutLabeling::operator==(const CutLabeling& other) const {
  return graph_->k() == other.graph_->k() && graph_->n() == other.graph_->n() &&
         labels_ == other.labels_;
}

bool CutSet::contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

bool CutSet::is_subset_of(const CutSet& other) const {
  return std::includes(other.edges.begin(), other.edges.end(), edges.begin(), edges.end());
}

CutSet delta(const CutLabeling& p) {
  CutSet out;
  const auto& g = p.graph();
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (p[e.u] != p[e.v]) out.edges.push_back(id);
  }
  return out;
}

Rational cost(const CutLabeling& p, const WeightMap& w) {
  if (p.graph().k() != w.graph().k() || p.graph().n() != w.graph().n()) {
    invalid_parameter("cut and weight map live on different graphs");
  }
  Rational sum = 0;
  const auto& g = p.graph();
  for (const auto& [id, weight] : w.entries()) {
    const Edge& e = g.edge(id);
    if (p[e.u] != p[e.v]) sum += weight;
  }
  return sum;
}

bool is_non_opposite(const CutLabeling& p) {
  const auto& g = p.graph();
  const Label aux = p.aux_label();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    Label l = p[v];
    if (l != aux && !g.in_support(v, l)) return false;
  }
  return true;
}

bool is_fragmenting(const CutLabeling& q) {
  const auto& g = q.graph();
  if (g.k() != 3) invalid_parameter("fragmentation is defined for cuts of Delta_{3,n}");
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    int cut = 0;
    for (EdgeId id : boundary_sets(g, i, j).edges) {
      const Edge& e = g.edge(id);
      if (q[e.u] != q[e.v]) ++cut;
    }
    if (cut < 2) return false;
  }
  return true;
}

CutLabeling restrict_to_face(const CutLabeling& p) {
  const auto& g = p.graph();
  const int k = g.k();
  if (k < 3) invalid_parameter("restriction needs k >= 3");
  std::vector<int> face(static_cast<std::size_t>(k - 1));
  for (int i = 1; i < k; ++i) face[static_cast<std::size_t>(i - 1)] = i;
  FaceGraph fg = project_face(g, face);
  std::vector<Label> labels(fg.graph->node_count());
  for (NodeId v = 0; v < labels.size(); ++v) {
    Label l = p[fg.to_parent[v]];
    if (l == k) throw Error("non-restrictable", "a face node carries the off-face terminal label");
    labels[v] = l == k + 1 ? static_cast<Label>(k) : l;
  }
  return CutLabeling(fg.graph, std::move(labels));
}

CutLabeling canonicalize_reachability(const CutLabeling& q) {
  const auto& g = q.graph();
  const int k = g.k();
  std::vector<Label> labels(g.node_count(), q.aux_label());
  std::deque<NodeId> queue;
  for (int i = 1; i <= k; ++i) {
    NodeId s = g.terminal(i);
    labels[s] = static_cast<Label>(i);
    queue.push_back(s);
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.incident(v)) {
        NodeId u = inc.neighbor;
        if (q[u] == q[v] && labels[u] == q.aux_label() && q[u] != q.aux_label()) {
          labels[u] = static_cast<Label>(i);
          queue.push_back(u);
        }
      }
    }
  }
  return CutLabeling(q.graph_ptr(), std::move(labels));
}

std::optional<NamedCut> parse_named_cut(std::string_view name) {
  if (name == "Q0") return NamedCut::Q0;
  if (name == "P_ext" || name == "P1") return NamedCut::PExt;
  if (name == "P_prime" || name == "P2") return NamedCut::PPrime;
  if (name == "P3") return NamedCut::P3;
  if (name == "Lemma5Tight") return NamedCut::Lemma5Tight;
  return std::nullopt;
}

const char* named_cut_name(NamedCut c) noexcept {
  switch (c) {
    case NamedCut::Q0: return "Q0";
    case NamedCut::PExt: return "P_ext";
    case NamedCut::PPrime: return "P_prime";
    case NamedCut::P3: return "P3";
    case NamedCut::Lemma5Tight: return "Lemma5Tight";
  }
  return "?";
}

namespace {

Label q0_label(int x1, int x2, int n) {
  if (2 * x1 >= n) return 1;
  if (2 * x2 >= n) return 2;
  return 3;
}

int integral_multiple(const Rational& r, int n, const char* what) {
  Rational v = r * n;
  if (v.get_den() != 1) invalid_parameter(std::string(what) + " times n must be an integer");
  return static_cast<int>(v.get_num().get_si());
}

}  // namespace

CutLabeling named_cut(NamedCut which, int n, const std::optional<Rational>& param) {
  if (n < 1) invalid_parameter("n must be at least 1");
  if (which == NamedCut::Q0) {
    auto g = SimplexGraph::get(3, n);
    std::vector<Label> labels(g->node_count());
    for (NodeId v = 0; v < g->node_count(); ++v) labels[v] = q0_label(g->coord(v, 1), g->coord(v, 2), n);
    return CutLabeling(g, std::move(labels));
  }

  auto g = SimplexGraph::get(4, n);
  std::vector<Label> labels(g->node_count(), 5);
  for (int i = 1; i <= 4; ++i) labels[g->terminal(i)] = static_cast<Label>(i);

  switch (which) {
    case NamedCut::PExt:
      for (NodeId v = 0; v < g->node_count(); ++v) {
        labels[v] = g->coord(v, 4) > 0 ? 4 : q0_label(g->coord(v, 1), g->coord(v, 2), n);
      }
      break;
    case NamedCut::PPrime:
      break;
    case NamedCut::P3: {
      if (!param) invalid_parameter("P3 needs c");
      if (*param <= 0 || *param >= Rational(1, 2)) invalid_parameter("c must lie in (0, 1/2)");
      const int level = n - integral_multiple(*param, n, "c");
      for (NodeId v = 0; v < g->node_count(); ++v) {
        if (g->coord(v, 4) != 0) continue;
        for (int i = 1; i <= 3; ++i) {
          if (g->coord(v, i) >= level) labels[v] = static_cast<Label>(i);
        }
      }
      break;
    }
    case NamedCut::Lemma5Tight: {
      if (!param) invalid_parameter("Lemma5Tight needs alpha");
      if (*param < 0 || *param > 1) invalid_parameter("alpha must lie in [0, 1]");
      const int radius = integral_multiple(*param, n, "alpha");
      // graph distance from s_1 is n - x_1
      for (NodeId v = 0; v < g->node_count(); ++v) {
        int x1 = g->coord(v, 1);
        if (x1 > 0 && n - x1 <= radius && g->terminal_index(v) == 0) labels[v] = 1;
      }
      break;
    }
    case NamedCut::Q0:
      break;
  }
  return CutLabeling(g, std::move(labels));
}

}  // namespace ckrgap
