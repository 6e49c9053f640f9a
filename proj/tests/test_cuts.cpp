#include <doctest.h>

#include "ckrgap/cuts.hpp"
#include "ckrgap/odometer.hpp"

using namespace ckrgap;

namespace {

std::vector<Label> pinned(const SimplexGraph& g, Label fill) {
  std::vector<Label> labels(g.node_count(), fill);
  for (int i = 1; i <= g.k(); ++i) labels[g.terminal(i)] = static_cast<Label>(i);
  return labels;
}

// Every labeling of g with terminals pinned and free labels in 1..k+1.
template <class F>
void for_all_labelings(const GraphPtr& g, F&& visit) {
  std::vector<std::vector<Label>> options(g->node_count());
  for (NodeId v = 0; v < g->node_count(); ++v) {
    if (int t = g->terminal_index(v)) {
      options[v] = {static_cast<Label>(t)};
    } else {
      for (int l = 1; l <= g->k() + 1; ++l) options[v].push_back(static_cast<Label>(l));
    }
  }
  Odometer<Label> od(options);
  do {
    visit(CutLabeling(g, std::vector<Label>(od.values().begin(), od.values().end())));
  } while (od.advance() >= 0);
}

}  // namespace

TEST_CASE("labelings must pin terminals") {
  auto g = SimplexGraph::get(3, 2);
  auto labels = pinned(*g, 4);
  labels[g->terminal(2)] = 1;
  CHECK_THROWS_AS(CutLabeling(g, labels), Error);
  labels = pinned(*g, 5);
  CHECK_THROWS_AS(CutLabeling(g, labels), Error);
  labels = pinned(*g, 0);
  CHECK_THROWS_AS(CutLabeling(g, labels), Error);
}

TEST_CASE("cut sets") {
  auto k4 = SimplexGraph::get(4, 1);
  CutLabeling p(k4, pinned(*k4, 5));
  CHECK(delta(p).size() == 6);

  CutLabeling pp = named_cut(NamedCut::PPrime, 2);
  CutSet d = delta(pp);
  for (int i = 1; i <= 4; ++i) {
    for (const Incidence& inc : pp.graph().incident(pp.graph().terminal(i))) CHECK(d.contains(inc.edge));
  }

  for (int n : {5, 6, 12}) {
    CutLabeling q0 = named_cut(NamedCut::Q0, n);
    CHECK(delta(q0).size() == static_cast<std::size_t>(2 * n + 1));
  }
}

TEST_CASE("cost agrees with uniform weights") {
  auto g = SimplexGraph::get(4, 3);
  std::vector<WeightMap::Entry> entries;
  for (EdgeId e = 0; e < g->edge_count(); ++e) entries.emplace_back(e, frac(2, 7));
  WeightMap w(g, "uniform", entries);
  for (NamedCut name : {NamedCut::PExt, NamedCut::PPrime}) {
    CutLabeling p = named_cut(name, 3);
    CHECK(cost(p, w) == frac(2, 7) * static_cast<long>(delta(p).size()));
  }
  CHECK_THROWS_AS(cost(named_cut(NamedCut::Q0, 3), w), Error);
}

TEST_CASE("named cut costs") {
  for (int n : {6, 12}) {
    WeightMap j = build_amm_j(n);
    CutLabeling q0 = named_cut(NamedCut::Q0, n);
    for (EdgeId e : delta(q0).edges) CHECK(j.weight(e) == frac(3, 5L * n));
    CHECK(cost(q0, j) == frac(6, 5) + frac(3, 5L * n));
  }
  CHECK(cost(named_cut(NamedCut::Q0, 12), build_amm_j(12)) == frac(5, 4));

  for (int n : {6, 12, 24}) {
    CAPTURE(n);
    CutLabeling pp = named_cut(NamedCut::PPrime, n);
    CHECK(cost(pp, build_component(Component::I1, n)) == frac(6, 5));
    CHECK(cost(pp, build_component(Component::I2, n)) == 2);
    CHECK(cost(pp, build_component(Component::I4, n)) == frac(12, static_cast<long>(n) * n));
    for (int a = 1; 2 * a < n; ++a) {
      Rational c = frac(a, n);
      CHECK(cost(pp, build_component(Component::I3, n, c)) == Rational(6 / (9 * c)));
      CutLabeling p3 = named_cut(NamedCut::P3, n, c);
      CHECK(is_non_opposite(p3));
      CHECK(cost(p3, build_component(Component::I2, n)) == 2);
      CHECK(cost(p3, build_component(Component::I3, n, c)) == 0);
      if (c < frac(1, 3)) CHECK(cost(p3, build_component(Component::I1, n)) == frac(6, 5));
      // finite-n form of 9c^2/2 on I4
      Rational expected = frac(9L * (a + 1) * (a + 2), 2) + 3;
      CHECK(cost(p3, build_component(Component::I4, n)) == expected / (static_cast<long>(n) * n));
    }
    CutLabeling pe = named_cut(NamedCut::PExt, n);
    CHECK(cost(pe, build_component(Component::I1, n)) == frac(6, 5) + frac(3, 5L * n));
    CHECK(cost(pe, build_component(Component::I2, n)) == 1);
    CHECK(cost(pe, build_component(Component::I4, n)) ==
          frac(3L * n * n + 7L * n + 2, 2L * n * n));
  }
}

TEST_CASE("non-opposite predicate") {
  CHECK(is_non_opposite(named_cut(NamedCut::PPrime, 3)));
  CHECK(is_non_opposite(named_cut(NamedCut::PExt, 6)));
  CHECK(is_non_opposite(named_cut(NamedCut::Q0, 6)));
  auto g = SimplexGraph::get(4, 3);
  auto labels = pinned(*g, 5);
  std::array<int, 4> on_v23{0, 2, 1, 0};
  labels[g->index_of(on_v23)] = 1;
  CHECK_FALSE(is_non_opposite(CutLabeling(g, labels)));
}

TEST_CASE("fragmenting predicate") {
  CHECK_FALSE(is_fragmenting(named_cut(NamedCut::Q0, 6)));
  for (int n : {2, 3, 6}) CHECK(is_fragmenting(restrict_to_face(named_cut(NamedCut::PPrime, n))));
  auto g1 = SimplexGraph::get(3, 1);
  for_all_labelings(g1, [](const CutLabeling& q) { CHECK_FALSE(is_fragmenting(q)); });
}

TEST_CASE("restriction to the face") {
  CutLabeling r = restrict_to_face(named_cut(NamedCut::PPrime, 4));
  CHECK(r.graph().k() == 3);
  for (NodeId v = 0; v < r.graph().node_count(); ++v) {
    CHECK(r[v] == (r.graph().terminal_index(v) ? r.graph().terminal_index(v) : 4));
  }
  for (int n : {3, 6, 9}) CHECK(restrict_to_face(named_cut(NamedCut::PExt, n)) == named_cut(NamedCut::Q0, n));
  CHECK(is_non_opposite(restrict_to_face(named_cut(NamedCut::P3, 8, frac(1, 4)))));

  auto g = SimplexGraph::get(4, 2);
  auto labels = pinned(*g, 5);
  std::array<int, 4> face_node{1, 1, 0, 0};
  labels[g->index_of(face_node)] = 4;
  try {
    restrict_to_face(CutLabeling(g, labels));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "non-restrictable");
  }
}

TEST_CASE("reachability canonicalization, all labelings of small faces") {
  for (int n : {2, 3}) {
    auto g = SimplexGraph::get(3, n);
    WeightMap j = build_amm_j(3);
    std::size_t seen = 0;
    for_all_labelings(g, [&](const CutLabeling& q) {
      CutLabeling c = canonicalize_reachability(q);
      CHECK(delta(c).is_subset_of(delta(q)));
      CHECK(c.count(4) >= q.count(4));
      CHECK(canonicalize_reachability(c) == c);
      if (is_non_opposite(q)) CHECK(is_non_opposite(c));
      if (n == 3) CHECK(cost(c, j) <= cost(q, j));
      ++seen;
    });
    CHECK(seen == (n == 2 ? 64u : 16384u));
  }
}

TEST_CASE("canonicalization examples") {
  CutLabeling q0 = named_cut(NamedCut::Q0, 6);
  CHECK(canonicalize_reachability(q0) == q0);
  auto g = SimplexGraph::get(3, 4);
  auto labels = pinned(*g, 4);
  std::array<int, 3> island{1, 2, 1};
  labels[g->index_of(island)] = 1;
  CutLabeling c = canonicalize_reachability(CutLabeling(g, labels));
  CHECK(c[g->index_of(island)] == 4);
}

TEST_CASE("named cut parameters") {
  CHECK_THROWS_AS(named_cut(NamedCut::P3, 8), Error);
  CHECK_THROWS_AS(named_cut(NamedCut::P3, 8, frac(1, 3)), Error);
  CHECK_THROWS_AS(named_cut(NamedCut::Lemma5Tight, 8), Error);
  CHECK_THROWS_AS(named_cut(NamedCut::Lemma5Tight, 8, frac(1, 3)), Error);
  CHECK(parse_named_cut("P_prime") == NamedCut::PPrime);
  CHECK(std::string(named_cut_name(NamedCut::Lemma5Tight)) == "Lemma5Tight");
  CHECK_FALSE(parse_named_cut("nope"));

  CutLabeling ball = named_cut(NamedCut::Lemma5Tight, 6, frac(1, 3));
  const SimplexGraph& g = ball.graph();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.terminal_index(v)) continue;
    CHECK(ball[v] == (g.coord(v, 1) >= 4 ? 1 : 5));
  }
}
