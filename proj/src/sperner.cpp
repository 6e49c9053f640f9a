#include "ckrgap/sperner.hpp"

#include <algorithm>

#include "ckrgap/odometer.hpp"

namespace ckrgap {

SimplexHypergraph::SimplexHypergraph(int k, int n) {
  if (k < 2 || n < 1) invalid_parameter("hypergraph needs k >= 2 and n >= 1");
  graph_ = SimplexGraph::get(k, n);
  std::vector<int> up(static_cast<std::size_t>(k));
  // Delta_{k,0} is the single origin
  std::vector<LatticePoint> base =
      n == 1 ? std::vector<LatticePoint>{LatticePoint(std::vector<int>(static_cast<std::size_t>(k), 0), 0)}
             : enumerate_points(k, n - 1);
  for (const LatticePoint& x : base) {
    for (int i = 0; i < k; ++i) {
      up = x.coords;
      ++up[static_cast<std::size_t>(i)];
      members_.push_back(graph_->index_of(up));
    }
  }
}

std::vector<EdgeId> SimplexHypergraph::clique(std::size_t h) const {
  std::vector<EdgeId> out;
  auto nodes = hyperedge(h);
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) out.push_back(*graph_->find_edge(nodes[a], nodes[b]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplexHypergraph build_hypergraph(int k, int n) { return SimplexHypergraph(k, n); }

namespace {

bool monochromatic(std::span<const NodeId> nodes, std::span<const Label> labels) {
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (labels[nodes[i]] != labels[nodes[0]]) return false;
  }
  return true;
}

}  // namespace

std::size_t count_monochromatic(const SimplexHypergraph& h, std::span<const Label> labels) {
  if (labels.size() != h.graph().node_count()) invalid_parameter("labeling must cover every node");
  std::size_t count = 0;
  for (std::size_t e = 0; e < h.size(); ++e) count += monochromatic(h.hyperedge(e), labels);
  return count;
}

bool is_sperner_admissible(const SimplexGraph& g, std::span<const Label> labels) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (labels[v] < 1 || labels[v] > g.k() || !g.in_support(v, labels[v])) return false;
  }
  return true;
}

Rational mv_bound(int k, int n) {
  if (k < 2 || n < 1) invalid_parameter("mv_bound needs k >= 2 and n >= 1");
  return binomial(n + k - 3, k - 1);
}

Rational nonmon_bound(int k, int n, const Rational& beta) {
  if (k < 3 || n < 1) invalid_parameter("nonmon_bound needs k >= 3 and n >= 1");
  Rational top = 1 / factorial(k - 2);
  if (beta < 0 || beta > top) invalid_parameter("beta must lie in [0, 1/(k-2)!]");
  return (top - beta) * factorial(n + k - 3) / factorial(n - 1);
}

Rational inadmissible_beta(int k, int n, std::uint64_t count) {
  Rational scale = factorial(n + k - 2) / factorial(n);
  return Rational(mpz_class(static_cast<unsigned long>(count))) / scale;
}

ExtremalResult exhaustive_extremal(int k, int n, bool face_restricted, std::uint64_t budget) {
  SimplexHypergraph h(k, n);
  const auto& g = h.graph();
  const unsigned facet = (1u << (k - 1)) - 1;

  std::vector<std::vector<Label>> options(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (int i = 1; i <= k; ++i) {
      if (g.in_support(v, i)) options[v].push_back(static_cast<Label>(i));
    }
    if (face_restricted && (g.support_mask(v) & ~facet) == 0) options[v].push_back(static_cast<Label>(k));
  }
  Odometer<Label> odo(std::move(options));
  if (odo.size() > budget) {
    throw Error("budget-exhausted", "labeling space of " + std::to_string(odo.size()) +
                                        " exceeds the budget of " + std::to_string(budget));
  }

  ExtremalResult out;
  out.witness.assign(odo.values().begin(), odo.values().end());
  bool first = true;
  do {
    auto labels = odo.values();
    const std::size_t mono = count_monochromatic(h, labels);
    if (first || mono > out.max_monochromatic) {
      out.max_monochromatic = mono;
      out.witness.assign(labels.begin(), labels.end());
      first = false;
    }
    if (face_restricted) {
      std::uint64_t bad = 0;
      for (NodeId v = 0; v < labels.size(); ++v) bad += !g.in_support(v, labels[v]);
      const std::size_t nonmono = h.size() - mono;
      auto [it, fresh] = out.by_inadmissible.try_emplace(bad, mono, nonmono);
      if (!fresh) {
        it->second.first = std::max(it->second.first, mono);
        it->second.second = std::min(it->second.second, nonmono);
      }
    }
    ++out.explored;
  } while (odo.advance() >= 0);
  return out;
}

Lemma5Result lemma5_check(const SimplexGraph& g, std::span<const Label> labels) {
  const int n = g.n();
  std::size_t face_count = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.coord(v, 4) == 0 && labels[v] >= 1 && labels[v] <= 3) ++face_count;
  }
  std::size_t cut = 0;
  for (const Edge& e : g.edges()) cut += labels[e.u] != labels[e.v];

  Lemma5Result out;
  out.alpha = Rational(mpz_class(static_cast<unsigned long>(face_count))) /
              (static_cast<long>(n + 1) * (n + 2));
  out.alpha.canonicalize();
  out.lower_bound = 3 * out.alpha * n * (n + 1);
  out.cut_size = cut;
  out.ok = Rational(mpz_class(static_cast<unsigned long>(cut))) >= out.lower_bound;
  return out;
}

Lemma5Result lemma5_check(const CutLabeling& p) {
  if (p.graph().k() != 4) invalid_parameter("the face-count cut check is defined on Delta_{4,n}");
  if (!is_non_opposite(p)) invalid_parameter("the face-count cut check needs a non-opposite cut");
  return lemma5_check(p.graph(), p.labels());
}

}  // namespace ckrgap
