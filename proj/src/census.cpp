#include "umrg/census.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_set>

namespace umrg {

namespace {

std::optional<int> shortest_cycle(const Graph& g) {
  const int n = g.node_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, root);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w : g.neighbors(u).members()) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

}  // namespace

StructuralCensus structural_census(const Graph& g) {
  StructuralCensus c;
  const int n = g.node_count();
  for (int v = 0; v < n; ++v) c.degree_sequence.push_back(g.degree(v));
  std::sort(c.degree_sequence.begin(), c.degree_sequence.end());
  if (n > 0) {
    c.min_degree = c.degree_sequence.front();
    c.max_degree = c.degree_sequence.back();
  }
  c.is_regular = c.min_degree == c.max_degree;
  c.girth = shortest_cycle(g);

  for (auto [u, v] : g.edges()) {
    const std::uint32_t common = g.adjacency_mask(u) & g.adjacency_mask(v);
    const std::uint32_t above = v + 1 >= 32 ? 0 : ~((std::uint32_t{1} << (v + 1)) - 1);
    c.triangle_count += std::popcount(common & above);
  }
  // Each 4-cycle has two diagonal pairs; each pair {u, w} closes C(k, 2)
  // cycles through its k common neighbours.
  std::int64_t twice = 0;
  for (int w = 1; w < n; ++w) {
    for (int u = 0; u < w; ++u) {
      const std::int64_t k = std::popcount(g.adjacency_mask(u) & g.adjacency_mask(w));
      twice += k * (k - 1) / 2;
    }
  }
  c.square_count = twice / 2;
  c.triangle_flag = c.triangle_count > 0 ? 1 : 0;
  return c;
}

bool is_connected_within(std::span<const std::uint32_t> adjacency, NodeSet nodes) {
  if (nodes.empty()) return true;
  std::uint32_t reached = std::uint32_t{1} << nodes.lowest();
  std::uint32_t frontier = reached;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adjacency[static_cast<std::size_t>(std::countr_zero(f))];
    next &= nodes.bits() & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == nodes.bits();
}

bool is_connected(const Graph& g) { return is_connected_within(g.adjacency(), g.all_nodes()); }

ConnectivityCensus connectivity_census(const Graph& g) {
  const int n = g.node_count();
  ConnectivityCensus out;
  out.bridges = EdgeSet(g.edge_count());
  out.connected = is_connected(g);

  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  int counter = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
    order[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = counter++;
    int children = 0;
    bool articulation = false;
    for (int w : g.neighbors(u).members()) {
      const int e = *g.edge_index(u, w);
      if (e == parent_edge) continue;
      if (order[static_cast<std::size_t>(w)] < 0) {
        ++children;
        dfs(w, e);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] > order[static_cast<std::size_t>(u)]) out.bridges.insert(e);
        if (parent_edge >= 0 && low[static_cast<std::size_t>(w)] >= order[static_cast<std::size_t>(u)]) articulation = true;
      } else {
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], order[static_cast<std::size_t>(w)]);
      }
    }
    if (parent_edge < 0 && children > 1) articulation = true;
    if (articulation) out.cut_points.insert(u);
  };
  for (int v = 0; v < n; ++v)
    if (order[static_cast<std::size_t>(v)] < 0) dfs(v, -1);

  out.biconnected = out.connected && n > 2 && out.cut_points.empty();
  return out;
}

EdgeSet boundary(const Graph& g, NodeSet a) {
  if (a.empty() || a == g.all_nodes() || (a - g.all_nodes()) != NodeSet{})
    throw GraphError("boundary: node set must be a nonempty proper subset");
  EdgeSet out(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (a.contains(u) != a.contains(v)) out.insert(e);
  }
  return out;
}

EdgeSet induced_edges(const Graph& g, NodeSet a) {
  EdgeSet out(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (a.contains(u) && a.contains(v)) out.insert(e);
  }
  return out;
}

std::vector<NodeSet> connected_subgraphs(const Graph& g, int order, int max_boundary) {
  const int n = g.node_count();
  if (order < 1 || 2 * order > n) throw GraphError("connected_subgraphs: order must be in [1, n/2]");

  // Grow connected sets one neighbour at a time; every set is grown from
  // its smallest node and visited once.
  std::unordered_set<std::uint32_t> seen;
  std::vector<NodeSet> out;
  std::function<void(NodeSet, int)> grow = [&](NodeSet current, int root) {
    if (!seen.insert(current.bits()).second) return;
    if (current.size() == order) {
      const int bound = [&] {
        int degree_sum = 0;
        for (int v : current.members()) degree_sum += g.degree(v);
        return degree_sum - 2 * g.induced_edge_count(current);
      }();
      if (bound <= max_boundary) out.push_back(current);
      return;
    }
    std::uint32_t frontier = 0;
    for (int v : current.members()) frontier |= g.adjacency_mask(v);
    frontier &= ~current.bits();
    frontier &= ~((std::uint32_t{1} << root) | ((std::uint32_t{1} << root) - 1));
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) grow(current | NodeSet::single(std::countr_zero(f)), root);
  };
  for (int v = 0; v < n; ++v) grow(NodeSet::single(v), v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace umrg
