#include "umrg/graph.hpp"

#include <algorithm>
#include <sstream>

namespace umrg {

Graph::Graph(int node_count, std::span<const Edge> edges) : n_(node_count) {
  if (node_count < 0 || node_count > kMaxNodes) throw GraphError("node count must be in [0, 32]");
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) throw GraphError("loop at node " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_) throw GraphError("edge endpoint out of range");
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw GraphError("duplicate edge");

  adjacency_.assign(static_cast<std::size_t>(n_), 0);
  index_.assign(static_cast<std::size_t>(n_ * n_), -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    adjacency_[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
    adjacency_[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    index_[static_cast<std::size_t>(u * n_ + v)] = static_cast<std::int16_t>(i);
    index_[static_cast<std::size_t>(v * n_ + u)] = static_cast<std::int16_t>(i);
  }
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  auto i = index_[static_cast<std::size_t>(u * n_ + v)];
  if (i < 0) return std::nullopt;
  return i;
}

int Graph::induced_edge_count(NodeSet a) const {
  int twice = 0;
  for (int v : a.members()) twice += std::popcount(adjacency_[static_cast<std::size_t>(v)] & a.bits());
  return twice / 2;
}

EdgeSet Graph::incident_edges(int v) const {
  EdgeSet out(edge_count());
  for (int w : neighbors(v).members()) out.insert(*edge_index(v, w));
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (auto [u, v] : edges_) mapped.push_back({perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]});
  return Graph(n_, mapped);
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.node_count() << ", e=" << g.edge_count() << ";";
  for (auto [u, v] : g.edges()) os << ' ' << u << '-' << v;
  os << ')';
  return os.str();
}

}  // namespace umrg
