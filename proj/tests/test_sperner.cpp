#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "ckrgap/odometer.hpp"
#include "ckrgap/search.hpp"
#include "ckrgap/sperner.hpp"

using namespace ckrgap;

namespace {

// Plain nested brute force over admissible labelings, independent of the
// library's enumerator.
std::size_t brute_max_mono(int k, int n) {
  SimplexHypergraph h(k, n);
  const SimplexGraph& g = h.graph();
  std::vector<std::vector<Label>> options(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (int i = 1; i <= k; ++i) {
      if (g.in_support(v, i)) options[v].push_back(static_cast<Label>(i));
    }
  }
  std::vector<std::size_t> digit(g.node_count(), 0);
  std::vector<Label> labels(g.node_count());
  std::size_t best = 0;
  while (true) {
    for (NodeId v = 0; v < g.node_count(); ++v) labels[v] = options[v][digit[v]];
    std::size_t mono = 0;
    for (std::size_t e = 0; e < h.size(); ++e) {
      auto m = h.hyperedge(e);
      mono += std::all_of(m.begin(), m.end(), [&](NodeId x) { return labels[x] == labels[m[0]]; });
    }
    best = std::max(best, mono);
    std::size_t p = 0;
    while (p < digit.size() && ++digit[p] == options[p].size()) digit[p++] = 0;
    if (p == digit.size()) break;
  }
  return best;
}

}  // namespace

TEST_CASE("hypergraph structure") {
  SimplexHypergraph h31(3, 1);
  REQUIRE(h31.size() == 1);
  std::set<NodeId> t(h31.hyperedge(0).begin(), h31.hyperedge(0).end());
  CHECK(t == std::set<NodeId>{h31.graph().terminal(1), h31.graph().terminal(2), h31.graph().terminal(3)});
  CHECK(build_hypergraph(4, 2).size() == 4);
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 5; ++n) {
      SimplexHypergraph h(k, n);
      CHECK(Rational(static_cast<long>(h.size())) == binomial(n + k - 2, k - 1));
      const SimplexGraph& g = h.graph();
      std::vector<std::set<NodeId>> sets;
      for (std::size_t e = 0; e < h.size(); ++e) {
        auto m = h.hyperedge(e);
        for (std::size_t a = 0; a < m.size(); ++a) {
          for (std::size_t b = a + 1; b < m.size(); ++b) {
            int l1 = 0;
            for (int i = 1; i <= k; ++i) l1 += std::abs(g.coord(m[a], i) - g.coord(m[b], i));
            CHECK(l1 == 2);
          }
        }
        sets.emplace_back(m.begin(), m.end());
      }
      for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
          std::vector<NodeId> common;
          std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                                std::back_inserter(common));
          CHECK(common.size() <= 1);
        }
      }
    }
  }
}

TEST_CASE("hyperedge cliques partition the edges for k = 4") {
  for (int n = 1; n <= 6; ++n) {
    SimplexHypergraph h(4, n);
    std::vector<int> hits(h.graph().edge_count(), 0);
    for (std::size_t e = 0; e < h.size(); ++e) {
      auto cl = h.clique(e);
      CHECK(cl.size() == 6);
      for (EdgeId x : cl) ++hits[x];
    }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; }));
    CHECK(h.graph().edge_count() == static_cast<std::size_t>(n * (n + 1) * (n + 2)));
  }
}

TEST_CASE("monochromatic counts") {
  SimplexHypergraph h31(3, 1);
  std::vector<Label> term{1, 2, 3};
  for (NodeId v = 0; v < 3; ++v) term[v] = static_cast<Label>(h31.graph().terminal_index(v));
  CHECK(count_monochromatic(h31, term) == 0);

  SimplexHypergraph h(3, 2);
  const SimplexGraph& g = h.graph();
  std::vector<Label> labels(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    labels[v] = g.terminal_index(v) ? static_cast<Label>(g.terminal_index(v)) : 1;
  }
  CHECK(count_monochromatic(h, labels) == 1);
}

TEST_CASE("bound formulas") {
  CHECK(mv_bound(3, 2) == 1);
  CHECK(mv_bound(3, 1) == 0);
  for (int n = 1; n <= 100; ++n) {
    CHECK(nonmon_bound(4, n, 0) == frac(static_cast<long>(n) * (n + 1), 2));
    CHECK(nonmon_bound(4, n, frac(1, 2)) == 0);
    for (long a : {0L, 1L, 7L, 50L}) {
      Rational alpha = frac(a, 100);
      CHECK(nonmon_bound(4, n, frac(1, 2) - alpha) == alpha * n * (n + 1));
    }
  }
  CHECK(nonmon_bound(5, 3, frac(1, 6)) == 0);
  CHECK_THROWS_AS(nonmon_bound(4, 3, frac(-1, 10)), Error);
  CHECK_THROWS_AS(nonmon_bound(4, 3, frac(3, 5)), Error);
  CHECK(inadmissible_beta(4, 2, 6) == frac(1, 2));
}

TEST_CASE("non-monochromatic bound is linear in beta") {
  // 201-point grid: second differences vanish exactly
  for (int n : {2, 5, 17}) {
    std::vector<Rational> values;
    for (int i = 0; i <= 200; ++i) values.push_back(nonmon_bound(4, n, frac(i, 400)));
    for (std::size_t i = 2; i < values.size(); ++i) CHECK(values[i] - 2 * values[i - 1] + values[i - 2] == 0);
  }
}

TEST_CASE("admissible extremal labelings reach the bound") {
  for (auto [k, n] : {std::pair{3, 1}, {3, 2}, {3, 3}, {3, 4}, {4, 1}, {4, 2}, {4, 3}}) {
    CAPTURE(k);
    CAPTURE(n);
    ExtremalResult r = exhaustive_extremal(k, n, false);
    SimplexHypergraph h(k, n);
    CHECK(Rational(static_cast<long>(r.max_monochromatic)) == mv_bound(k, n));
    CHECK(count_monochromatic(h, r.witness) == r.max_monochromatic);
    CHECK(is_sperner_admissible(h.graph(), r.witness));
    if (r.explored < 100000) CHECK(brute_max_mono(k, n) == r.max_monochromatic);
  }
  CHECK(exhaustive_extremal(3, 2, false).explored == 8);
}

TEST_CASE("face-restricted extremal labelings") {
  ExtremalResult r = exhaustive_extremal(4, 2, true);
  CHECK(r.explored == 1728);
  REQUIRE(r.by_inadmissible.size() == 7);
  for (const auto& [count, stats] : r.by_inadmissible) {
    CHECK(Rational(static_cast<long>(stats.second)) >= nonmon_bound(4, 2, inadmissible_beta(4, 2, count)));
    CHECK(stats.first + stats.second <= 4);
  }
  CHECK(r.by_inadmissible.at(0).first == 1);
}

TEST_CASE("extremal search respects the budget") {
  try {
    exhaustive_extremal(4, 3, false, 1000);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "budget-exhausted");
  }
}

TEST_CASE("face-count cut check on every non-opposite cut of Delta_{4,2}") {
  auto g = SimplexGraph::get(4, 2);
  SimplexHypergraph h(4, 2);
  std::uint64_t seen = 0;
  enumerate_non_opposite(*g, [&](std::span<const Label> labels) {
    ++seen;
    Lemma5Result r = lemma5_check(*g, labels);
    CHECK(r.ok);
    // independent recount
    std::size_t face = 0, cut = 0;
    for (NodeId v = 0; v < g->node_count(); ++v) face += g->coord(v, 4) == 0 && labels[v] <= 3;
    for (const Edge& e : g->edges()) cut += labels[e.u] != labels[e.v];
    CHECK(r.cut_size == cut);
    CHECK(r.alpha == frac(static_cast<long>(face), 12));
    CHECK(r.lower_bound == 3 * r.alpha * 6);
    // each non-monochromatic hyperedge puts at least 3 edges in the cut
    for (std::size_t e = 0; e < h.size(); ++e) {
      auto m = h.hyperedge(e);
      bool mono = std::all_of(m.begin(), m.end(), [&](NodeId x) { return labels[x] == labels[m[0]]; });
      std::size_t in_cut = 0;
      for (EdgeId x : h.clique(e)) in_cut += labels[g->edge(x).u] != labels[g->edge(x).v];
      if (!mono) CHECK(in_cut >= 3);
    }
  });
  CHECK(seen == 729);
}

TEST_CASE("face-count cut check on named cuts") {
  Lemma5Result r = lemma5_check(named_cut(NamedCut::PPrime, 6));
  CHECK(r.alpha == frac(3, 56));
  CHECK(r.ok);
  for (int n : {12, 24, 48}) {
    for (int j = 1; j <= 5; ++j) {
      Lemma5Result t = lemma5_check(named_cut(NamedCut::Lemma5Tight, n, frac(j, 6)));
      CHECK(t.ok);
      Rational excess = Rational(static_cast<long>(t.cut_size)) - 3 * t.alpha * n * n;
      CHECK(abs(excess) <= 4 * n);
    }
  }
  CHECK_THROWS_AS(lemma5_check(named_cut(NamedCut::Q0, 6)), Error);
  auto g = SimplexGraph::get(4, 2);
  std::vector<Label> labels(g->node_count(), 5);
  for (int i = 1; i <= 4; ++i) labels[g->terminal(i)] = static_cast<Label>(i);
  std::array<int, 4> mid{1, 1, 0, 0};
  labels[g->index_of(mid)] = 3;
  CHECK_THROWS_AS(lemma5_check(CutLabeling(g, labels)), Error);
}
