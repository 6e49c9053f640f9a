#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "ckrgap/lattice.hpp"

using namespace ckrgap;

namespace {

// Independent pair scan over all node pairs.
std::size_t pair_scan_edges(const SimplexGraph& g) {
  std::size_t count = 0;
  for (NodeId a = 0; a < g.node_count(); ++a) {
    for (NodeId b = a + 1; b < g.node_count(); ++b) {
      int l1 = 0;
      for (int i = 1; i <= g.k(); ++i) l1 += std::abs(g.coord(a, i) - g.coord(b, i));
      count += l1 == 2;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("point enumeration sizes and order") {
  CHECK(enumerate_points(4, 2).size() == 10);
  CHECK(enumerate_points(3, 3).size() == 10);
  auto two = enumerate_points(2, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0].coords == std::vector<int>{1, 0});
  CHECK(two[1].coords == std::vector<int>{0, 1});
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 7; ++n) {
      auto pts = enumerate_points(k, n);
      CHECK(Rational(static_cast<long>(pts.size())) == binomial(n + k - 1, k - 1));
      for (std::size_t i = 1; i < pts.size(); ++i) CHECK(colex_less(pts[i - 1].coords, pts[i].coords));
    }
  }
  CHECK_THROWS_AS(enumerate_points(1, 3), Error);
  CHECK_THROWS_AS(enumerate_points(3, 0), Error);
}

TEST_CASE("graph counts match the pair scan") {
  CHECK(SimplexGraph(3, 2).node_count() == 6);
  CHECK(SimplexGraph(3, 2).edge_count() == 9);
  CHECK(SimplexGraph(4, 1).edge_count() == 6);
  CHECK(SimplexGraph(4, 2).edge_count() == 24);
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      SimplexGraph g(k, n);
      CHECK(Rational(static_cast<long>(g.node_count())) == binomial(n + k - 1, k - 1));
      CHECK(Rational(static_cast<long>(g.edge_count())) == binomial(k, 2) * binomial(n + k - 2, k - 1));
      CHECK(g.edge_count() == pair_scan_edges(g));
    }
  }
}

TEST_CASE("edges, incidences and terminals are consistent") {
  SimplexGraph g(4, 3);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    CHECK(ed.u < ed.v);
    for (int i = 1; i <= 4; ++i) {
      int diff = g.coord(ed.v, i) - g.coord(ed.u, i);
      CHECK(diff == (i == ed.plus) - (i == ed.minus));
    }
    CHECK(g.find_edge(ed.v, ed.u) == e);
  }
  std::size_t degree_sum = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) degree_sum += g.incident(v).size();
  CHECK(degree_sum == 2 * g.edge_count());
  for (int i = 1; i <= 4; ++i) {
    CHECK(g.coord(g.terminal(i), i) == 3);
    CHECK(g.terminal_index(g.terminal(i)) == i);
  }
  std::vector<int> mid{1, 1, 1, 0};
  CHECK(g.point(g.index_of(mid)).coords == mid);
}

TEST_CASE("boundary sets") {
  SimplexGraph g(4, 5);
  auto b = boundary_sets(g, 1, 2);
  CHECK(b.nodes.size() == 6);
  CHECK(b.edges.size() == 5);
  CHECK(b.nodes.front() == g.terminal(1));
  CHECK(b.nodes.back() == g.terminal(2));
  CHECK_THROWS_AS(boundary_sets(g, 2, 2), Error);

  SimplexGraph h(3, 9);
  for (EdgeId e : boundary_sets(h, 2, 3).edges) {
    CHECK(h.coord(h.edge(e).u, 1) == 0);
    CHECK(h.coord(h.edge(e).v, 1) == 0);
  }

  SimplexGraph g2(4, 2);
  std::set<EdgeId> all;
  std::size_t total = 0;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      auto s = boundary_sets(g2, i, j);
      total += s.edges.size();
      all.insert(s.edges.begin(), s.edges.end());
    }
  }
  CHECK(total == 12);
  CHECK(all.size() == 12);
}

TEST_CASE("parallel lines") {
  SimplexGraph g(3, 9);
  auto line = parallel_line(g, 2, 3, 3);
  CHECK(line.nodes.size() == 4);
  CHECK(line.edges.size() == 3);
  for (NodeId v : line.nodes) CHECK(g.coord(v, 1) == 6);
  auto full = parallel_line(g, 2, 3, 9);
  auto boundary = boundary_sets(g, 2, 3);
  CHECK(full.nodes == boundary.nodes);
  CHECK(full.edges == boundary.edges);
  auto corner = parallel_line(g, 2, 3, 0);
  CHECK(corner.nodes == std::vector<NodeId>{g.terminal(1)});
  CHECK(corner.edges.empty());
  CHECK_THROWS_AS(parallel_line(g, 2, 3, 10), Error);
}

TEST_CASE("red regions") {
  SimplexGraph g(4, 8);
  RedRegions red = red_regions(g, frac(1, 4));
  CHECK(red.red_edge_count() == 18);
  CHECK(red.corners[0].u.size() == 3);
  for (const RedCorner& rc : red.corners) {
    CHECK(rc.gamma.size() == 6);
    CHECK(is_simple_cycle(g, rc.r, rc.gamma));
    for (NodeId v : rc.closure) CHECK(g.coord(v, 4) == 0);
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      std::vector<NodeId> common;
      std::set_intersection(red.corners[a].closure.begin(), red.corners[a].closure.end(),
                            red.corners[b].closure.begin(), red.corners[b].closure.end(),
                            std::back_inserter(common));
      CHECK(common.empty());
    }
  }
  CHECK_THROWS_AS(red_regions(g, frac(1, 3)), Error);
  CHECK_THROWS_AS(red_regions(g, frac(1, 2)), Error);
  CHECK_THROWS_AS(red_regions(g, Rational(0)), Error);
}

TEST_CASE("red edges form cycles with 9cn edges for every valid c") {
  for (int n = 2; n <= 16; ++n) {
    SimplexGraph g(4, n);
    for (int a = 1; 2 * a < n; ++a) {
      CAPTURE(n);
      CAPTURE(a);
      RedRegions red = red_regions(g, frac(a, n));
      CHECK(red.red_edge_count() == static_cast<std::size_t>(9 * a));
      for (const RedCorner& rc : red.corners) {
        CHECK(is_simple_cycle(g, rc.r, rc.gamma));
        CHECK(rc.closure.size() == static_cast<std::size_t>((a + 1) * (a + 2) / 2));
      }
    }
  }
}

TEST_CASE("face subgraphs") {
  SimplexGraph g(4, 5);
  std::vector<int> face{1, 2, 3};
  auto sub = face_subgraph(g, face);
  CHECK(sub.nodes.size() == 21);
  CHECK(sub.edges.size() == SimplexGraph(3, 5).edge_count());
  std::vector<int> all{1, 2, 3, 4};
  CHECK(face_subgraph(g, all).nodes.size() == g.node_count());
  CHECK(face_subgraph(g, all).edges.size() == g.edge_count());
  std::vector<int> pair{1, 2};
  auto path = face_subgraph(g, pair);
  auto b = boundary_sets(g, 1, 2);
  std::vector<NodeId> sorted = b.nodes;
  std::sort(sorted.begin(), sorted.end());
  CHECK(path.nodes == sorted);
  CHECK_THROWS_AS(face_subgraph(g, std::vector<int>{}), Error);

  FaceGraph f = project_face(g, face);
  CHECK(f.graph->k() == 3);
  for (NodeId v = 0; v < f.graph->node_count(); ++v) {
    for (int i = 1; i <= 3; ++i) CHECK(f.graph->coord(v, i) == g.coord(f.to_parent[v], i));
  }
}
