#include "umrg/builders.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

namespace umrg {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw GraphError(what);
}

// K_4 edges in the fixed order used for insertion vectors.
constexpr std::array<Edge, 6> kK4Edges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
// Perfect matchings of K_4 as pairs of positions in kK4Edges.
constexpr std::array<std::array<int, 2>, 3> kK4Matchings{{{0, 5}, {1, 4}, {2, 3}}};

std::vector<int> parse_ints(std::string_view args) {
  std::vector<int> out;
  while (!args.empty()) {
    auto comma = args.find(',');
    auto token = args.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw GraphError("builder: bad integer '" + std::string(token) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph complete(int n) {
  require(n >= 1 && n <= kMaxNodes, "complete: n out of range");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  const std::array<int, 2> parts{a, b};
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const int> parts) {
  require(!parts.empty(), "complete_multipartite: no parts");
  require(std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 1; }),
          "complete_multipartite: empty part");
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  require(n <= kMaxNodes, "complete_multipartite: too many nodes");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3 && n <= kMaxNodes, "cycle: n must be in [3, 32]");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph path(int n) {
  require(n >= 1 && n <= kMaxNodes, "path: n out of range");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph theta(int l1, int l2, int l3) {
  const std::array<int, 3> lengths{l1, l2, l3};
  require(std::all_of(lengths.begin(), lengths.end(), [](int l) { return l >= 1; }), "theta: lengths must be >= 1");
  require(std::count(lengths.begin(), lengths.end(), 1) <= 1, "theta: at most one path of length 1");
  const int n = 2 + (l1 - 1) + (l2 - 1) + (l3 - 1);
  require(n <= kMaxNodes, "theta: too many nodes");
  std::vector<Edge> edges;
  int next = 2;
  for (int l : lengths) {
    int prev = 0;
    for (int step = 1; step < l; ++step) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return Graph(n, edges);
}

Graph moebius(int m) {
  require(m >= 2 && 2 * m <= kMaxNodes, "moebius: m must be in [2, 16]");
  const int n = 2 * m;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  for (int v = 0; v < m; ++v) edges.push_back({v, v + m});
  return Graph(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, edges);
}

Graph complement_of(const Graph& g) {
  std::vector<Edge> edges;
  const int n = g.node_count();
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph kn_minus_matching(int n, int match_size) {
  require(n >= 2 && n <= kMaxNodes, "kn_minus_matching: n out of range");
  require(match_size >= 0 && 2 * match_size <= n, "kn_minus_matching: matching too large");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (!(u % 2 == 0 && v == u + 1 && u / 2 < match_size)) edges.push_back({u, v});
  return Graph(n, edges);
}

std::array<int, 6> boesch_insertions(int n) {
  require(n >= 4, "boesch_n_plus_2: n must be >= 4");
  require(n <= kMaxNodes, "boesch_n_plus_2: n must be <= 32");
  const int points = n - 4;
  const int base = points / 6;
  const int extra = points % 6;
  // Candidates in increasing lexicographic order: masks choosing which edges
  // get base+1; the vector is smaller when the +1 entries sit later.
  std::vector<std::array<int, 6>> candidates;
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (std::popcount(mask) != extra) continue;
    std::array<int, 6> counts{};
    for (int e = 0; e < 6; ++e) counts[static_cast<std::size_t>(e)] = base + static_cast<int>((mask >> e) & 1U);
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      for (int j = i + 1; j < 3 && ok; ++j) {
        const auto& pi = kK4Matchings[static_cast<std::size_t>(i)];
        const auto& pj = kK4Matchings[static_cast<std::size_t>(j)];
        const auto c = [&](int pos) { return counts[static_cast<std::size_t>(pos)]; };
        if (c(pi[0]) + c(pi[1]) == c(pj[0]) + c(pj[1]))
          ok = c(pi[0]) == c(pi[1]) && c(pi[0]) == c(pj[0]) && c(pj[0]) == c(pj[1]);
      }
    }
    if (ok) candidates.push_back(counts);
  }
  require(!candidates.empty(), "boesch_n_plus_2: no balanced insertion exists");
  return *std::min_element(candidates.begin(), candidates.end());
}

Graph boesch_n_plus_2(int n) {
  const auto counts = boesch_insertions(n);
  std::vector<Edge> edges;
  int next = 4;
  for (std::size_t e = 0; e < 6; ++e) {
    int prev = kK4Edges[e].u;
    for (int k = 0; k < counts[e]; ++k) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, kK4Edges[e].v});
  }
  return Graph(n, edges);
}

Graph build_named(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto family = spec.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const auto ints = [&](std::size_t expected) {
    auto v = parse_ints(args);
    if (expected != 0 && v.size() != expected)
      throw GraphError("builder '" + std::string(family) + "' expects " + std::to_string(expected) + " argument(s)");
    if (v.empty()) throw GraphError("builder '" + std::string(family) + "' needs arguments");
    return v;
  };

  if (family == "complete") return complete(ints(1)[0]);
  if (family == "complete_bipartite") {
    auto v = ints(2);
    return complete_bipartite(v[0], v[1]);
  }
  if (family == "complete_multipartite") {
    auto v = ints(0);
    return complete_multipartite(v);
  }
  if (family == "cycle") return cycle(ints(1)[0]);
  if (family == "path") return path(ints(1)[0]);
  if (family == "theta") {
    auto v = ints(3);
    return theta(v[0], v[1], v[2]);
  }
  if (family == "moebius") return moebius(ints(1)[0]);
  if (family == "petersen") return petersen();
  if (family == "complement_of") return complement_of(build_named(args));
  if (family == "kn_minus_matching") {
    auto v = ints(2);
    return kn_minus_matching(v[0], v[1]);
  }
  if (family == "boesch_n_plus_2") return boesch_n_plus_2(ints(1)[0]);
  throw GraphError("unknown graph family '" + std::string(family) + "'");
}

}  // namespace umrg
