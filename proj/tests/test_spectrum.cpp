#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "umrg/arith.hpp"
#include "umrg/builders.hpp"
#include "umrg/census.hpp"
#include "umrg/spectrum.hpp"

using namespace umrg;

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Number of components of the spanning subgraph keeping edges in `keep`.
int components(const Graph& g, std::uint64_t keep) {
  UnionFind uf(g.node_count());
  int comps = g.node_count();
  for (int i = 0; i < g.edge_count(); ++i)
    if ((keep >> i) & 1U)
      if (uf.unite(g.edge(i).u, g.edge(i).v)) --comps;
  return comps;
}

std::vector<std::int64_t> brute_spectrum(const Graph& g) {
  const int e = g.edge_count();
  std::vector<std::int64_t> m(static_cast<std::size_t>(e) + 1, 0);
  const std::uint64_t full = (std::uint64_t{1} << e) - 1;
  for (std::uint64_t removed = 0; removed <= full; ++removed)
    if (components(g, full & ~removed) > 1) ++m[static_cast<std::size_t>(std::popcount(removed))];
  return m;
}

std::int64_t brute_trees(const Graph& g) {
  const int e = g.edge_count();
  const int n = g.node_count();
  std::int64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << e); ++s)
    if (std::popcount(s) == n - 1 && components(g, s) == 1) ++count;
  return count;
}

int brute_min_cut(const Graph& g) {
  const int n = g.node_count();
  int best = g.edge_count();
  for (std::uint32_t m = 1; m + 1 < (1u << n); ++m) best = std::min(best, boundary(g, NodeSet(m)).size());
  return best;
}

Graph random_connected(int n, int e, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(e));
    Graph g(n, all);
    if (is_connected(g)) return g;
  }
}

std::vector<Graph> small_graphs() {
  std::mt19937_64 rng(17);
  std::vector<Graph> out = {complete(5),     complete_bipartite(3, 3), cycle(7),  path(6),
                            theta(1, 2, 3),  moebius(3),               complete(4), boesch_n_plus_2(7),
                            kn_minus_matching(5, 2)};
  for (int i = 0; i < 12; ++i) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const int e = std::min(n * (n - 1) / 2, n - 1 + static_cast<int>(rng() % 7));
    out.push_back(random_connected(n, e, rng));
  }
  return out;
}

}  // namespace

TEST_CASE("reference spectrum of K_{4,4}") {
  const auto s = cutset_spectrum(complete_bipartite(4, 4));
  const std::vector<std::int64_t> expected = {0,     0,     0,     0,     8,     96,    544,    1888,   4446,
                                              7344,  8008,  4368,  1820,  560,   120,   16,     1};
  CHECK(s.m == expected);
  CHECK(s.first_nonzero() == 4);
  CHECK(tree_number(complete_bipartite(4, 4)) == 4096);
  CHECK(edge_connectivity(complete_bipartite(4, 4)) == 4);
  CHECK(is_superconnected(complete_bipartite(4, 4)));
}

TEST_CASE("spectrum matches a union-find oracle") {
  for (const Graph& g : small_graphs()) {
    const auto s = cutset_spectrum(g);
    CHECK(s.m == brute_spectrum(g));
    CHECK(spectrum_by_complement(g) == s);
    CHECK(cutset_spectrum(g, 4) == s);
    CHECK(s.m.back() == 1);
    for (int k = 0; k <= g.edge_count(); ++k) CHECK(s[k] <= binomial(g.edge_count(), k));
    if (g.node_count() <= 8)
      for (int k = 0; k <= g.edge_count(); ++k) CHECK(spectrum_via_components(g, k) == s[k]);
  }
}

TEST_CASE("spectrum rejects unsupported input") {
  CHECK_THROWS_AS(cutset_spectrum(Graph(4, {{0, 1}, {2, 3}})), SpectrumError);
  CHECK_THROWS_AS(cutset_spectrum(complete(9)), SpectrumError);
}

TEST_CASE("tree number and edge connectivity") {
  for (const Graph& g : small_graphs()) {
    if (g.node_count() <= 6 || g.edge_count() <= 14) CHECK(tree_number(g) == brute_trees(g));
    CHECK(edge_connectivity(g) == brute_min_cut(g));
    CHECK(cutset_spectrum(g).first_nonzero() == edge_connectivity(g));
  }
  for (int n = 2; n <= 9; ++n) {
    std::int64_t cayley = 1;
    for (int i = 0; i < n - 2; ++i) cayley *= n;
    CHECK(tree_number(complete(n)) == cayley);
    CHECK(tree_number(cycle(n < 3 ? 3 : n)) == (n < 3 ? 3 : n));
  }
  CHECK(tree_number(petersen()) == 2000);
}

TEST_CASE("superconnectivity") {
  CHECK(is_superconnected(complete(5)));
  CHECK_FALSE(is_superconnected(cycle(6)));
  CHECK_FALSE(is_superconnected(path(4)));
}

TEST_CASE("unreliability polynomial") {
  const auto s = cutset_spectrum(complete_bipartite(4, 4));
  CHECK(unreliability(s, 0.0) == 0.0);
  CHECK(unreliability(s, 1.0) == 1.0);
  CHECK_THROWS_AS(unreliability(s, -0.1), std::domain_error);
  CHECK_THROWS_AS(unreliability(s, 1.5), std::domain_error);
  for (int n = 2; n <= 7; ++n) {
    const auto t = cutset_spectrum(path(n));
    for (double rho : {0.01, 0.2, 0.5, 0.9})
      CHECK(unreliability(t, rho) == doctest::Approx(1 - std::pow(1 - rho, n - 1)).epsilon(1e-12));
  }
  double prev = 0;
  for (int i = 1; i <= 100; ++i) {
    const double u = unreliability(s, i / 100.0);
    CHECK(u >= prev);
    prev = u;
  }
}

TEST_CASE("monte carlo estimator") {
  const Graph g = complete_bipartite(4, 4);
  const auto a = monte_carlo_unreliability(g, 0.3, 20000, 42);
  const auto b = monte_carlo_unreliability(g, 0.3, 20000, 42);
  CHECK(a.estimate == b.estimate);
  CHECK(a.failures == b.failures);
  CHECK(a.trials == 20000);
  const double exact = unreliability(cutset_spectrum(g), 0.3);
  CHECK(std::abs(a.estimate - exact) < 5 * a.std_error + 1e-9);
}

TEST_CASE("spectrum comparison") {
  const auto k44 = cutset_spectrum(complete_bipartite(4, 4));
  const auto same = compare(k44, k44);
  CHECK(same.dominates);
  CHECK_FALSE(same.first_divergence.has_value());
  CHECK(same.near_zero_winner == Winner::kTie);

  // A hexagon with a long chord against one with a short chord.
  Graph ring = cycle(6);
  std::vector<Edge> long_chord(ring.edges().begin(), ring.edges().end());
  std::vector<Edge> short_chord = long_chord;
  long_chord.push_back({0, 3});
  short_chord.push_back({0, 2});
  const auto a = cutset_spectrum(Graph(6, long_chord));
  const auto b = cutset_spectrum(Graph(6, short_chord));
  const auto c = compare(a, b);
  bool le = true;
  std::optional<int> first, last;
  for (int k = 0; k <= a.edges; ++k) {
    le = le && a[k] <= b[k];
    if (a[k] != b[k]) {
      if (!first) first = k;
      last = k;
    }
  }
  CHECK(c.dominates == le);
  CHECK(c.first_divergence == first);
  CHECK(c.last_divergence == last);
  REQUIRE(first.has_value());
  CHECK(c.near_zero_winner == (a[*first] < b[*first] ? Winner::kFirst : Winner::kSecond));
  CHECK(compare(b, a).near_zero_winner != c.near_zero_winner);
  CHECK_THROWS_AS(compare(k44, cutset_spectrum(cycle(8))), SpectrumError);
}

TEST_CASE("output formats") {
  const auto s = cutset_spectrum(complete(3));
  CHECK(spectrum_csv(s) == "k,m_k,C_e_k\n0,0,1\n1,0,3\n2,3,3\n3,1,1\n");
  const double rhos[] = {0.5};
  CHECK(evaluation_table_csv(s, rhos).find("0.5") != std::string::npos);
  CHECK(spectrum_json(s, "Bw").find("\"Bw\"") != std::string::npos);
}
