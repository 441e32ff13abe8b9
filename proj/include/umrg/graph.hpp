#ifndef UMRG_GRAPH_HPP
#define UMRG_GRAPH_HPP

/// Small simple undirected graphs (at most 32 nodes) stored as per-node
/// neighbour bitmasks plus a lexicographically sorted edge list.

#include <bit>
#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umrg {

inline constexpr int kMaxNodes = 32;
inline constexpr int kMaxEdges = kMaxNodes * (kMaxNodes - 1) / 2;

/// Raised for malformed graphs, out-of-range builder parameters and
/// violated operation preconditions.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Set of node indices, one bit per node.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr NodeSet single(int v) { return NodeSet(std::uint32_t{1} << v); }
  static constexpr NodeSet first(int n) {
    return NodeSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr NodeSet& insert(int v) {
    bits_ |= std::uint32_t{1} << v;
    return *this;
  }
  constexpr NodeSet& erase(int v) {
    bits_ &= ~(std::uint32_t{1} << v);
    return *this;
  }

  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  constexpr NodeSet operator-(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const NodeSet&) const = default;
  constexpr auto operator<=>(const NodeSet&) const = default;

  /// Node indices in increasing order.
  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Set of edge positions of a particular graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe) : universe_(universe) {}

  int universe() const { return universe_; }
  bool contains(int e) const { return bits_.test(static_cast<std::size_t>(e)); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }

  EdgeSet& insert(int e) {
    if (e < 0 || e >= universe_) throw GraphError("edge position out of range");
    bits_.set(static_cast<std::size_t>(e));
    return *this;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int e = 0; e < universe_; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  /// Low 64 positions as a word; only meaningful when universe() <= 64.
  std::uint64_t low_word() const { return (bits_ & std::bitset<kMaxEdges>(~std::uint64_t{0})).to_ullong(); }

  bool operator==(const EdgeSet&) const = default;

 private:
  int universe_ = 0;
  std::bitset<kMaxEdges> bits_;
};

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  constexpr auto operator<=>(const Edge&) const = default;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list in any order and orientation.
  /// Throws GraphError on loops, duplicates, or nodes outside [0, n).
  Graph(int node_count, std::span<const Edge> edges);
  Graph(int node_count, std::initializer_list<Edge> edges)
      : Graph(node_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int position) const { return edges_.at(static_cast<std::size_t>(position)); }

  NodeSet neighbors(int v) const { return NodeSet(adjacency_[static_cast<std::size_t>(v)]); }
  std::uint32_t adjacency_mask(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::span<const std::uint32_t> adjacency() const { return {adjacency_.data(), static_cast<std::size_t>(n_)}; }
  bool adjacent(int u, int v) const { return (adjacency_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adjacency_[static_cast<std::size_t>(v)]); }
  NodeSet all_nodes() const { return NodeSet::first(n_); }

  /// Position of edge {u, v} in edges(), if present.
  std::optional<int> edge_index(int u, int v) const;

  /// Number of edges with both endpoints in `a`.
  int induced_edge_count(NodeSet a) const;

  /// Edges incident to v (the trivial cutset E_v).
  EdgeSet incident_edges(int v) const;

  /// Graph obtained by mapping node i to perm[i].
  Graph relabeled(std::span<const int> perm) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adjacency_;
  std::vector<std::int16_t> index_;  // n*n, -1 when absent
};

std::string to_string(const Graph& g);

}  // namespace umrg

#endif
