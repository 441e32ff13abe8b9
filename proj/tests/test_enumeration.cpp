#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "umrg/arith.hpp"
#include "umrg/builders.hpp"
#include "umrg/census.hpp"
#include "umrg/enumeration.hpp"
#include "umrg/graph6.hpp"

using namespace umrg;

namespace {

Graph from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) edges.push_back({u, v});
  return Graph(n, edges);
}

// Smallest upper-triangle bitstring over every relabelling.
std::vector<bool> brute_canonical(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> bits;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) bits.push_back(g.adjacent(perm[u], perm[v]));
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::int64_t brute_automorphisms(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && g.adjacent(perm[u], perm[v]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

bool brute_graphical(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  const int pairs = n * (n - 1) / 2;
  for (std::uint32_t m = 0; m < (1u << pairs); ++m) {
    const Graph g = from_mask(n, m);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = g.degree(v) == d[static_cast<std::size_t>(v)];
    if (ok) return true;
  }
  return false;
}

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("Erdos-Gallai test") {
  CHECK(is_graphical({4, 4, 4, 4, 4, 4, 4, 4}));
  CHECK(is_graphical({}));
  CHECK(is_graphical({0}));
  CHECK_FALSE(is_graphical({1}));
  CHECK_FALSE(is_graphical({3, 3, 1, 1}));
  CHECK_FALSE(is_graphical({4, 1, 1, 1}));
  CHECK(is_graphical({3, 1, 1, 1}));
  CHECK_FALSE(is_graphical({-1, 1}));

  // Every sequence on up to 5 nodes against exhaustive search.
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (;;) {
      CHECK(is_graphical(d) == brute_graphical(d));
      int i = 0;
      while (i < n && d[static_cast<std::size_t>(i)] == n - 1) d[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
      ++d[static_cast<std::size_t>(i)];
    }
  }
}

TEST_CASE("graphical sequences") {
  for (int n = 2; n <= 5; ++n)
    for (int e = 0; e <= n * (n - 1) / 2; ++e) {
      std::set<std::vector<int>> expected;
      for (std::uint32_t m = 0; m < (1u << (n * (n - 1) / 2)); ++m)
        if (std::popcount(m) == e) expected.insert(degree_sequence(from_mask(n, m)).degrees);
      std::set<std::vector<int>> got;
      for (const auto& s : graphical_sequences(n, e, 0, n - 1)) got.insert(s.degrees);
      CHECK(got == expected);
    }
  const auto seqs = graphical_sequences(8, 16, 1, 7);
  CHECK(std::is_sorted(seqs.begin(), seqs.end()));
  for (const auto& s : seqs) {
    CHECK(s.sum() == 32);
    CHECK(std::is_sorted(s.degrees.begin(), s.degrees.end()));
  }
}

TEST_CASE("canonical form against exhaustive relabelling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = from_mask(n, static_cast<std::uint32_t>(rng()) & ((1u << (n * (n - 1) / 2)) - 1));
    const Graph h = g.relabeled(shuffled(n, rng));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(automorphism_count(g) == brute_automorphisms(g));
    // Two graphs share a form exactly when they share the exhaustive minimum.
    const Graph other = from_mask(n, static_cast<std::uint32_t>(rng()) & ((1u << (n * (n - 1) / 2)) - 1));
    CHECK((canonical_form(g) == canonical_form(other)) == (brute_canonical(g) == brute_canonical(other)));
  }
  CHECK(automorphism_count(petersen()) == 120);
  CHECK(automorphism_count(complete_bipartite(4, 4)) == 1152);
  CHECK(automorphism_count(cycle(9)) == 18);
  CHECK(automorphism_count(moebius(4)) == 16);
}

TEST_CASE("canonical form is invariant on larger graphs") {
  std::mt19937_64 rng(29);
  for (const Graph& g : {petersen(), complete_bipartite(4, 4), moebius(6), complement_of(cycle(11)),
                         boesch_n_plus_2(14), kn_minus_matching(10, 5)}) {
    const std::string form = canonical_form(g);
    for (int i = 0; i < 20; ++i) CHECK(canonical_form(g.relabeled(shuffled(g.node_count(), rng))) == form);
    CHECK(to_graph6(canonical_graph(g)) == form);
  }
}

TEST_CASE("orbit counting matches labelled counts") {
  for (int n = 1; n <= 5; ++n)
    for (int e = 0; e <= n * (n - 1) / 2; ++e) {
      ClassFilter f;
      f.n = n;
      f.e = e;
      std::int64_t labelled = 0;
      for (Backend b : {Backend::kDegreeSequence, Backend::kEdgeAugmentation}) {
        labelled = 0;
        for (const Graph& g : enumerate_class(f, b)) labelled += factorial(n) / automorphism_count(g);
        CHECK(labelled == binomial(n * (n - 1) / 2, e));
      }
    }
}

TEST_CASE("class counts") {
  const std::int64_t all[] = {1, 2, 4, 11, 34, 156};
  const std::int64_t connected[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    std::int64_t total = 0, conn = 0;
    for (int e = 0; e <= n * (n - 1) / 2; ++e) {
      ClassFilter f;
      f.n = n;
      f.e = e;
      total += static_cast<std::int64_t>(enumerate_class(f).size());
      f.connected = true;
      conn += static_cast<std::int64_t>(enumerate_class(f).size());
    }
    CHECK(total == all[n - 1]);
    CHECK(conn == connected[n - 1]);
  }
}

TEST_CASE("backends agree and filters apply") {
  for (auto [n, e] : {std::pair{6, 8}, {7, 10}, {7, 11}}) {
    ClassFilter f;
    f.n = n;
    f.e = e;
    f.connected = true;
    const auto a = enumerate_class(f, Backend::kDegreeSequence, 1);
    const auto b = enumerate_class(f, Backend::kEdgeAugmentation, 1);
    CHECK(a == b);
    CHECK(enumerate_class(f, Backend::kDegreeSequence, 4) == a);
    std::set<std::string> forms;
    for (const Graph& g : a) {
      CHECK(is_connected(g));
      forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == a.size());

    f.biconnected = true;
    for (const Graph& g : enumerate_class(f)) CHECK(connectivity_census(g).biconnected);
    f.biconnected = false;
    f.min_degree = 3;
    for (const Graph& g : enumerate_class(f)) CHECK(structural_census(g).min_degree == 3);
  }
  ClassFilter cubic;
  cubic.n = 8;
  cubic.e = 12;
  cubic.connected = true;
  cubic.regular = true;
  CHECK(enumerate_class(cubic).size() == 5);
}

TEST_CASE("stratification and budget") {
  ClassFilter f;
  f.n = 6;
  f.e = 7;
  f.connected = true;
  const auto s = stratify(f);
  std::int64_t sum = 0;
  for (auto [d, c] : s.delta_counts) sum += c;
  CHECK(sum == s.total);
  CHECK(s.biconnected_count <= s.total);

  f.budget = 10;
  CHECK_THROWS_AS(enumerate_class(f), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_class(f, Backend::kEdgeAugmentation), BudgetExceeded);

  ClassFilter bad;
  bad.n = 4;
  bad.e = 7;
  CHECK_THROWS_AS(bad.validate(), GraphError);
}
