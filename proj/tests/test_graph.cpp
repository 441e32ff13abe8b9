#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "umrg/builders.hpp"
#include "umrg/census.hpp"
#include "umrg/enumeration.hpp"
#include "umrg/graph.hpp"
#include "umrg/graph6.hpp"

using namespace umrg;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.node_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("node sets") {
  NodeSet s = NodeSet::single(3) | NodeSet::single(5);
  CHECK(s.size() == 2);
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(4));
  CHECK(s.lowest() == 3);
  CHECK((s - NodeSet::single(3)) == NodeSet::single(5));
  CHECK(NodeSet::first(32).size() == 32);
  CHECK(s.members() == std::vector<int>{3, 5});
}

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph(33, {}), GraphError);

  const Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(2) == Edge{1, 2});
  CHECK(g.adjacent(3, 0));
  CHECK(g.degree(1) == 2);
  CHECK(g.edge_index(2, 1) == 2);
  CHECK_FALSE(g.edge_index(2, 3).has_value());
  CHECK(g.induced_edge_count(NodeSet::first(3)) == 2);
  CHECK(g.incident_edges(1).size() == 2);
}

TEST_CASE("relabelling preserves structure") {
  const Graph g = petersen();
  std::vector<int> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(11);
  std::shuffle(perm.begin(), perm.end(), rng);
  const Graph h = g.relabeled(perm);
  CHECK(h.edge_count() == 15);
  for (auto [u, v] : g.edges()) CHECK(h.adjacent(perm[u], perm[v]));
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(complete(4)) == "C~");
  CHECK(to_graph6(Graph(1, {})) == "@");
  CHECK(to_graph6(Graph(0, {})) == "?");
  CHECK(from_graph6(">>graph6<<C~\n") == complete(4));
  // Petersen as published in the standard graph6 collection.
  CHECK(canonical_form(from_graph6("IheA@GUAo")) == canonical_form(petersen()));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), Graph6Error);
  CHECK_THROWS_AS(from_graph6("A_x"), Graph6Error);   // too long
  CHECK_THROWS_AS(from_graph6("C"), Graph6Error);     // too short
  CHECK_THROWS_AS(from_graph6("B\x7f"), Graph6Error); // byte out of range
  CHECK_THROWS_AS(from_graph6("Bx"), Graph6Error);    // nonzero padding
  CHECK_THROWS_AS(from_graph6("~?@?"), GraphError);   // 63 nodes, beyond the cap
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 33);
    const Graph g = random_graph(n, 0.4, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 streams") {
  std::stringstream io;
  write_graph6_stream(io, {complete(4), cycle(5)});
  CHECK(io.str() == "C~\nDhc\n");
  const auto back = read_graph6_stream(io);
  REQUIRE(back.size() == 2);
  CHECK(back[1] == cycle(5));
}

TEST_CASE("named families") {
  CHECK(complete(6).edge_count() == 15);
  CHECK(complete_bipartite(4, 4).edge_count() == 16);
  CHECK(degrees(complete_bipartite(4, 4)) == std::vector<int>(8, 4));
  const int parts[] = {2, 2, 2};
  CHECK(complete_multipartite(parts).edge_count() == 12);
  CHECK(cycle(7).edge_count() == 7);
  CHECK(path(5).edge_count() == 4);

  const Graph t = theta(1, 2, 3);
  CHECK(t.node_count() == 5);
  CHECK(t.edge_count() == 6);
  CHECK_THROWS_AS(theta(1, 1, 2), GraphError);

  const Graph wagner = moebius(4);
  CHECK(degrees(wagner) == std::vector<int>(8, 3));
  CHECK(structural_census(wagner).girth == 4);
  CHECK(structural_census(petersen()).girth == 5);

  const Graph anti = complement_of(cycle(7));
  CHECK(degrees(anti) == std::vector<int>(7, 4));
  CHECK(anti.edge_count() == 14);

  const Graph km = kn_minus_matching(6, 3);
  CHECK(km.edge_count() == 12);
  CHECK_FALSE(km.adjacent(0, 1));
  CHECK_FALSE(km.adjacent(4, 5));
  CHECK(km.adjacent(1, 2));
}

TEST_CASE("balanced subdivisions of K4") {
  for (int n = 4; n <= 20; ++n) {
    const Graph g = boesch_n_plus_2(n);
    CHECK(g.node_count() == n);
    CHECK(g.edge_count() == n + 2);
    CHECK(connectivity_census(g).biconnected);
    const auto ins = boesch_insertions(n);
    CHECK(std::accumulate(ins.begin(), ins.end(), 0) == n - 4);
    CHECK(*std::max_element(ins.begin(), ins.end()) - *std::min_element(ins.begin(), ins.end()) <= 1);
    // Perfect matchings of K4 in edge order 01,02,03,12,13,23.
    const int totals[] = {ins[0] + ins[5], ins[1] + ins[4], ins[2] + ins[3]};
    const std::pair<int, int> pairs[] = {{0, 5}, {1, 4}, {2, 3}};
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (totals[a] == totals[b]) {
          auto sa = std::minmax(ins[pairs[a].first], ins[pairs[a].second]);
          auto sb = std::minmax(ins[pairs[b].first], ins[pairs[b].second]);
          CHECK(sa == sb);
        }
  }
  CHECK(boesch_n_plus_2(4) == complete(4));
  CHECK_THROWS_AS(boesch_n_plus_2(3), GraphError);
}

TEST_CASE("builder specs") {
  CHECK(build_named("complete_bipartite:4,4") == complete_bipartite(4, 4));
  CHECK(build_named("complement_of:cycle:7") == complement_of(cycle(7)));
  CHECK(build_named("petersen") == petersen());
  CHECK_THROWS_AS(build_named("nope:3"), GraphError);
  CHECK_THROWS_AS(build_named("cycle:3,4"), GraphError);
  CHECK_THROWS_AS(build_named("cycle"), GraphError);
}
