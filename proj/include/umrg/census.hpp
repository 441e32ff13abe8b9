#ifndef UMRG_CENSUS_HPP
#define UMRG_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "umrg/graph.hpp"

namespace umrg {

struct StructuralCensus {
  std::vector<int> degree_sequence;  // nondecreasing
  int min_degree = 0;
  int max_degree = 0;
  bool is_regular = false;
  std::optional<int> girth;  // nullopt for forests
  std::int64_t triangle_count = 0;
  std::int64_t square_count = 0;  // distinct 4-cycles
  int triangle_flag = 0;

  bool acyclic() const { return !girth.has_value(); }
};

StructuralCensus structural_census(const Graph& g);

struct ConnectivityCensus {
  bool connected = false;
  bool biconnected = false;
  EdgeSet bridges;
  NodeSet cut_points;
};

ConnectivityCensus connectivity_census(const Graph& g);

bool is_connected(const Graph& g);

/// Whether the nodes in `nodes` are connected using only the given
/// adjacency rows restricted to `nodes`.
bool is_connected_within(std::span<const std::uint32_t> adjacency, NodeSet nodes);

/// Edges with exactly one endpoint in `a`. Throws GraphError when `a` is
/// empty or contains every node.
EdgeSet boundary(const Graph& g, NodeSet a);

/// Edges with both endpoints in `a`.
EdgeSet induced_edges(const Graph& g, NodeSet a);

/// Node sets of the given order that induce a connected subgraph and have
/// at most `max_boundary` boundary edges, in increasing bitmask order.
std::vector<NodeSet> connected_subgraphs(const Graph& g, int order, int max_boundary);

}  // namespace umrg

#endif
