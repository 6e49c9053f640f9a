#include "ckrgap/search.hpp"

#include <algorithm>
#include <deque>
#include <thread>

#include "ckrgap/bounds.hpp"
#include "ckrgap/kernels.hpp"
#include "ckrgap/odometer.hpp"

namespace ckrgap {

ScaledWeights::ScaledWeights(const WeightMap& w) : graph_(w.graph_ptr()), den_(1) {
  for (const auto& [e, value] : w.entries()) mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), value.get_den_mpz_t());
  dense_.assign(graph_->edge_count(), 0);
  mpz_class total = 0;
  for (const auto& [e, value] : w.entries()) {
    mpz_class scaled = value.get_num() * (den_ / value.get_den());
    total += scaled;
    if (!total.fits_slong_p() || total > (mpz_class(1) << 62)) {
      throw Error("internal", "weights do not fit the 62-bit integer search representation");
    }
    dense_[e] = scaled.get_si();
    const Edge& edge = graph_->edge(e);
    u_.push_back(edge.u);
    v_.push_back(edge.v);
    w_.push_back(dense_[e]);
  }
}

Rational ScaledWeights::to_rational(std::int64_t value) const {
  Rational r(mpz_class(static_cast<long>(value)), den_);
  r.canonicalize();
  return r;
}

std::int64_t ScaledWeights::cost(std::span<const std::int32_t> labels) const noexcept {
  return kernels::cut_cost(u_.data(), v_.data(), w_.data(), w_.size(), labels.data());
}

std::vector<std::vector<Label>> non_opposite_options(const SimplexGraph& g) {
  const int k = g.k();
  std::vector<std::vector<Label>> options(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (int t = g.terminal_index(v)) {
      options[v] = {static_cast<Label>(t)};
      continue;
    }
    for (int i = 1; i <= k; ++i) {
      if (g.in_support(v, i)) options[v].push_back(static_cast<Label>(i));
    }
    options[v].push_back(static_cast<Label>(k + 1));
  }
  return options;
}

std::uint64_t enumerate_non_opposite(const SimplexGraph& g,
                                     const std::function<void(std::span<const Label>)>& visit,
                                     std::uint64_t budget) {
  Odometer<Label> odo(non_opposite_options(g));
  if (odo.size() > budget) {
    throw Error("budget-exhausted", "non-opposite cut space of " + std::to_string(odo.size()) +
                                        " exceeds the budget of " + std::to_string(budget));
  }
  std::uint64_t visited = 0;
  do {
    visit(odo.values());
    ++visited;
  } while (odo.advance() >= 0);
  return visited;
}

namespace {

// Weighted adjacency restricted to positive edges, in scaled integers.
struct WeightedAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<std::pair<NodeId, std::int64_t>> items;

  explicit WeightedAdjacency(const ScaledWeights& sw) {
    const auto& g = sw.graph();
    offsets.push_back(0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      for (const Incidence& inc : g.incident(v)) {
        if (std::int64_t w = sw.scaled(inc.edge)) items.emplace_back(inc.neighbor, w);
      }
      offsets.push_back(items.size());
    }
  }

  std::span<const std::pair<NodeId, std::int64_t>> of(NodeId v) const {
    return {items.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
  std::int64_t weight_sum(NodeId v) const {
    std::int64_t s = 0;
    for (const auto& [u, w] : of(v)) s += w;
    return s;
  }
};

struct Partial {
  std::int64_t best = 0;
  std::vector<Label> argmin;
  std::uint64_t explored = 0;
  bool found = false;
  bool complete = true;

  void offer(std::int64_t cost, std::span<const Label> labels) {
    if (!found || cost < best) {
      best = cost;
      argmin.assign(labels.begin(), labels.end());
      found = true;
    }
  }
};

class Exhaustive {
 public:
  Exhaustive(const ScaledWeights& sw, const WeightedAdjacency& adj)
      : sw_(sw), adj_(adj), options_(non_opposite_options(sw.graph())) {
    for (NodeId v = 0; v < options_.size(); ++v) {
      if (options_[v].size() > 1) free_.push_back(v);
    }
  }

  std::uint64_t space() const {
    std::vector<std::vector<Label>> opts;
    for (NodeId v : free_) opts.push_back(options_[v]);
    return Odometer<Label>(std::move(opts)).size();
  }
  std::size_t free_count() const noexcept { return free_.size(); }
  std::size_t top_radix() const noexcept { return free_.empty() ? 1 : options_[free_[0]].size(); }

  // Enumerates the labelings whose most significant free digit equals `top`
  // (or all of them), stopping after `limit` labelings.
  Partial run(std::optional<std::uint32_t> top, std::uint64_t limit) const {
    const auto& g = sw_.graph();
    std::vector<Label> labels(g.node_count());
    for (NodeId v = 0; v < labels.size(); ++v) labels[v] = options_[v][0];
    std::vector<std::uint32_t> digit(free_.size(), 0);
    std::size_t start = 0;
    if (top) {
      digit[0] = *top;
      labels[free_[0]] = options_[free_[0]][*top];
      start = 1;
    }
    std::int64_t cost = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (labels[g.edge(e).u] != labels[g.edge(e).v]) cost += sw_.scaled(e);
    }

    auto relabel = [&](NodeId v, Label next) {
      const Label prev = labels[v];
      for (const auto& [u, w] : adj_.of(v)) {
        const Label l = labels[u];
        cost += w * (static_cast<int>(next != l) - static_cast<int>(prev != l));
      }
      labels[v] = next;
    };

    Partial out;
    for (;;) {
      out.offer(cost, labels);
      if (++out.explored >= limit) {
        out.complete = false;
        break;
      }
      std::size_t p = free_.size();
      bool advanced = false;
      while (p-- > start) {
        const NodeId v = free_[p];
        const auto& opt = options_[v];
        if (++digit[p] < opt.size()) {
          relabel(v, opt[digit[p]]);
          advanced = true;
          break;
        }
        digit[p] = 0;
        relabel(v, opt[0]);
      }
      if (!advanced) break;
    }
    // The last labeling was visited within budget; the run is complete.
    if (!out.complete && out.explored == limit) {
      std::size_t p = free_.size();
      bool last = true;
      while (p-- > start) last = last && digit[p] + 1 == options_[free_[p]].size();
      if (last) out.complete = true;
    }
    return out;
  }

 private:
  const ScaledWeights& sw_;
  const WeightedAdjacency& adj_;
  std::vector<std::vector<Label>> options_;
  std::vector<NodeId> free_;
};

Partial run_exhaustive(const ScaledWeights& sw, const WeightedAdjacency& adj, const SearchBudget& budget) {
  Exhaustive engine(sw, adj);
  const std::uint64_t space = engine.space();
  if (space > budget.max_labelings || budget.threads <= 1 || engine.free_count() == 0) {
    return engine.run(std::nullopt, budget.max_labelings);
  }
  const std::size_t radix = engine.top_radix();
  std::vector<Partial> parts(radix);
  const unsigned workers = std::min<unsigned>(budget.threads, static_cast<unsigned>(radix));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t d = t; d < radix; d += workers) {
        parts[d] = engine.run(static_cast<std::uint32_t>(d), budget.max_labelings);
      }
    });
  }
  for (auto& th : pool) th.join();
  Partial out;
  for (const Partial& part : parts) {
    out.explored += part.explored;
    if (part.found && (!out.found || part.best < out.best)) {
      out.best = part.best;
      out.argmin = part.argmin;
      out.found = true;
    }
  }
  return out;
}

class BranchAndBound {
 public:
  BranchAndBound(const ScaledWeights& sw, const WeightedAdjacency& adj, std::uint64_t limit)
      : sw_(sw), adj_(adj), options_(non_opposite_options(sw.graph())), limit_(limit) {
    const auto& g = sw.graph();
    labels_.assign(g.node_count(), 0);
    decided_.assign(g.node_count(), false);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (g.terminal_index(v)) {
        labels_[v] = options_[v][0];
        decided_[v] = true;
      } else {
        order_.push_back(v);
      }
    }
    std::vector<std::int64_t> heft(g.node_count());
    for (NodeId v : order_) heft[v] = adj.weight_sum(v);
    std::stable_sort(order_.begin(), order_.end(), [&](NodeId a, NodeId b) { return heft[a] > heft[b]; });
  }

  Partial solve() {
    std::int64_t partial = 0;
    const auto& g = sw_.graph();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if (decided_[edge.u] && decided_[edge.v] && labels_[edge.u] != labels_[edge.v]) partial += sw_.scaled(e);
    }
    dfs(0, partial);
    out_.complete = !aborted_;
    return std::move(out_);
  }

 private:
  void dfs(std::size_t depth, std::int64_t partial) {
    if (depth == order_.size()) {
      out_.offer(partial, labels_);
      return;
    }
    const NodeId v = order_[depth];
    for (Label l : options_[v]) {
      if (++out_.explored > limit_) {
        --out_.explored;
        aborted_ = true;
        return;
      }
      std::int64_t next = partial;
      for (const auto& [u, w] : adj_.of(v)) {
        if (decided_[u] && labels_[u] != l) next += w;
      }
      if (out_.found && next >= out_.best) continue;
      labels_[v] = l;
      decided_[v] = true;
      dfs(depth + 1, next);
      decided_[v] = false;
      if (aborted_) return;
    }
  }

  const ScaledWeights& sw_;
  const WeightedAdjacency& adj_;
  std::vector<std::vector<Label>> options_;
  std::uint64_t limit_;
  std::vector<NodeId> order_;
  std::vector<Label> labels_;
  std::vector<bool> decided_;
  Partial out_;
  bool aborted_ = false;
};

}  // namespace

SearchResult min_non_opposite_cost(const WeightMap& w, const SearchBudget& budget) {
  const int k = w.graph().k();
  if (k != 3 && k != 4) invalid_parameter("non-opposite search supports k = 3 and k = 4");
  if (budget.max_labelings == 0) return SearchResult{};
  ScaledWeights sw(w);
  WeightedAdjacency adj(sw);
  Partial part = budget.mode == SearchBudget::Mode::Exhaustive ? run_exhaustive(sw, adj, budget)
                                                                : BranchAndBound(sw, adj, budget.max_labelings).solve();
  SearchResult out;
  out.explored = part.explored;
  out.proven_optimal = part.complete;
  if (part.found) {
    out.min_cost = sw.to_rational(part.best);
    out.argmin.emplace(w.graph_ptr(), std::move(part.argmin));
  }
  return out;
}

Rational min_terminal_face_cut(const WeightMap& w, int i) {
  const auto& g = w.graph();
  if (g.k() != 3) invalid_parameter("terminal-face cut is defined on Delta_{3,n}");
  if (i < 1 || i > 3) invalid_parameter("terminal index must lie in 1..3");

  struct Arc {
    std::uint32_t to;
    std::uint32_t rev;
    Rational cap;
  };
  const auto sink = static_cast<std::uint32_t>(g.node_count());
  std::vector<std::vector<Arc>> net(g.node_count() + 1);
  auto link = [&](std::uint32_t a, std::uint32_t b, const Rational& ab, const Rational& ba) {
    net[a].push_back({b, static_cast<std::uint32_t>(net[b].size()), ab});
    net[b].push_back({a, static_cast<std::uint32_t>(net[a].size() - 1), ba});
  };
  for (const auto& [e, value] : w.entries()) {
    const Edge& edge = g.edge(e);
    link(edge.u, edge.v, value, value);
  }
  const Rational infinite = 1 + total_weight(w);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.coord(v, i) == 0) link(v, sink, infinite, Rational(0));
  }

  const std::uint32_t source = g.terminal(i);
  Rational flow = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> parent(net.size());
  for (;;) {
    std::vector<bool> seen(net.size(), false);
    std::deque<std::uint32_t> queue{source};
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      const std::uint32_t x = queue.front();
      queue.pop_front();
      for (std::uint32_t a = 0; a < net[x].size(); ++a) {
        const Arc& arc = net[x][a];
        if (!seen[arc.to] && arc.cap > 0) {
          seen[arc.to] = true;
          parent[arc.to] = {x, a};
          queue.push_back(arc.to);
        }
      }
    }
    if (!seen[sink]) break;
    Rational bottleneck = infinite;
    for (std::uint32_t y = sink; y != source; y = parent[y].first) {
      const Arc& arc = net[parent[y].first][parent[y].second];
      if (arc.cap < bottleneck) bottleneck = arc.cap;
    }
    for (std::uint32_t y = sink; y != source; y = parent[y].first) {
      Arc& arc = net[parent[y].first][parent[y].second];
      arc.cap -= bottleneck;
      net[arc.to][arc.rev].cap += bottleneck;
    }
    flow += bottleneck;
  }
  return flow;
}

bool verify_theorem2(const GapParams& params, const SearchResult& result) {
  if (!result.proven_optimal) return false;
  return result.min_cost >= theorem2_bound(params, params.n).bound;
}

}  // namespace ckrgap
