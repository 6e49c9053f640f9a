#include "ckrgap/instances.hpp"

#include <algorithm>
#include <map>

namespace ckrgap {

WeightMap::WeightMap(GraphPtr graph, std::string tag) : graph_(std::move(graph)), tag_(std::move(tag)) {
  if (!graph_) invalid_parameter("weight map needs a graph");
}

WeightMap::WeightMap(GraphPtr graph, std::string tag, std::vector<Entry> entries)
    : WeightMap(std::move(graph), std::move(tag)) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t s = 0; s < entries.size(); ++s) {
    const auto& [e, w] = entries[s];
    if (e >= graph_->edge_count()) invalid_parameter("weighted edge is not in the graph");
    if (w < 0) invalid_parameter("edge weights must be non-negative");
    if (s > 0 && entries[s - 1].first == e) invalid_parameter("duplicate edge weight");
  }
  entries_.reserve(entries.size());
  for (auto& entry : entries) {
    if (entry.second != 0) entries_.push_back(std::move(entry));
  }
}

Rational WeightMap::weight(EdgeId e) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                             [](const Entry& a, EdgeId id) { return a.first < id; });
  if (it == entries_.end() || it->first != e) return Rational(0);
  return it->second;
}

Rational total_weight(const WeightMap& w) {
  Rational sum = 0;
  for (const auto& [e, value] : w.entries()) sum += value;
  return sum;
}

const char* component_name(Component c) noexcept {
  switch (c) {
    case Component::I1: return "I1";
    case Component::I2: return "I2";
    case Component::I3: return "I3";
    case Component::I4: return "I4";
  }
  return "?";
}

std::optional<Component> parse_component(std::string_view name) {
  if (name == "I1") return Component::I1;
  if (name == "I2") return Component::I2;
  if (name == "I3") return Component::I3;
  if (name == "I4") return Component::I4;
  return std::nullopt;
}

void GapParams::validate() const {
  Rational sum = 0;
  for (const auto& l : lambda) {
    if (l < 0) throw Error("lambda-simplex-violation", "lambda components must be non-negative");
    sum += l;
  }
  if (sum != 1) throw Error("lambda-simplex-violation", "lambda components must sum to 1");
  if (c <= 0 || c >= Rational(1, 2)) invalid_parameter("c must lie in (0, 1/2)");
  if (n < 0) invalid_parameter("n must be non-negative");
}

GapParams reported_params(int n) {
  GapParams p;
  p.lambda = {parse_rational("0.751652"), parse_rational("0.147852"), parse_rational("0.000275"),
              parse_rational("0.100221")};
  p.c = parse_rational("0.074125");
  p.n = n;
  return p;
}

int amm_boundary_units(int n, int d) {
  const int m = n / 3;
  const int from_end = 2 * d <= n ? d : n - d + 1;
  return std::max(m - from_end + 1, 1);
}

WeightMap build_amm_j(int n) {
  if (n < 3 || n % 3 != 0) invalid_parameter("J needs n >= 3 divisible by 3");
  auto g = SimplexGraph::get(3, n);
  const Rational rho = frac(3, 5 * n);

  std::vector<WeightMap::Entry> entries;
  std::vector<bool> boundary(g->edge_count(), false);
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    auto line = boundary_sets(*g, i, j);
    for (std::size_t d = 0; d < line.edges.size(); ++d) {
      boundary[line.edges[d]] = true;
      entries.emplace_back(line.edges[d], rho * amm_boundary_units(n, static_cast<int>(d) + 1));
    }
  }
  for (EdgeId id = 0; id < g->edge_count(); ++id) {
    if (boundary[id]) continue;
    const Edge& e = g->edge(id);
    // An interior edge that keeps x_i fixed runs parallel to the side
    // opposite e^i; inside the closed corner x_i >= 2/3 it weighs zero.
    bool zero = false;
    for (int i = 1; i <= 3; ++i) {
      if (e.plus != i && e.minus != i && 3 * g->coord(e.u, i) >= 2 * n) zero = true;
    }
    if (!zero) entries.emplace_back(id, rho);
  }
  return WeightMap(g, "J", std::move(entries));
}

WeightMap build_component(Component which, int n, const std::optional<Rational>& c) {
  auto g = SimplexGraph::get(4, n);
  std::vector<WeightMap::Entry> entries;
  switch (which) {
    case Component::I1: {
      WeightMap j = build_amm_j(n);
      const int face[] = {1, 2, 3};
      FaceGraph fg = project_face(*g, face);
      for (const auto& [e, w] : j.entries()) {
        const Edge& fe = j.graph().edge(e);
        auto id = g->find_edge(fg.to_parent[fe.u], fg.to_parent[fe.v]);
        entries.emplace_back(*id, w);
      }
      break;
    }
    case Component::I2: {
      for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        for (EdgeId e : boundary_sets(*g, i, j).edges) entries.emplace_back(e, Rational(1, 3));
      }
      break;
    }
    case Component::I3: {
      if (!c) invalid_parameter("I3 needs the red-region parameter c");
      RedRegions red = red_regions(*g, *c);
      Rational w = 1 / (9 * *c);
      for (const auto& corner : red.corners) {
        for (EdgeId e : corner.gamma) entries.emplace_back(e, w);
      }
      break;
    }
    case Component::I4: {
      Rational w = frac(1, static_cast<long>(n) * n);
      entries.reserve(g->edge_count());
      for (EdgeId e = 0; e < g->edge_count(); ++e) entries.emplace_back(e, w);
      break;
    }
  }
  return WeightMap(g, component_name(which), std::move(entries));
}

WeightMap combine(const GapParams& params) {
  params.validate();
  const int n = params.n;
  if (n < 1) invalid_parameter("combine needs n >= 1");
  auto g = SimplexGraph::get(4, n);
  std::vector<Rational> dense(g->edge_count());
  for (int m = 0; m < 4; ++m) {
    const Rational& lam = params.lambda[static_cast<std::size_t>(m)];
    if (lam == 0) continue;
    WeightMap part = build_component(static_cast<Component>(m), n, params.c);
    for (const auto& [e, w] : part.entries()) dense[e] += lam * w;
  }
  std::vector<WeightMap::Entry> entries;
  for (EdgeId e = 0; e < dense.size(); ++e) {
    if (dense[e] != 0) entries.emplace_back(e, std::move(dense[e]));
  }
  return WeightMap(g, "combined", std::move(entries));
}

}  // namespace ckrgap
