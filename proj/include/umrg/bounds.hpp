#ifndef UMRG_BOUNDS_HPP
#define UMRG_BOUNDS_HPP

// Lower bounds on m_k from trivial cutsets. M^k_v is the family of k-edge
// sets containing every edge at v; any such set disconnects v, so
// m_k >= |union_{v in A} M^k_v| for every node set A, and the union is
// expanded by inclusion-exclusion with
//
//   |intersection_{v in S} M^k_v| = C(e - i, k - i),  i = sum_S deg - |E[S]|.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umrg/graph.hpp"

namespace umrg {

/// C(e - i, k - i): ways to complete an i-edge forced set to k edges.
/// Zero when k < i (in particular when more than e edges are forced).
std::int64_t extension_count(int k, int i, int e);

enum class BoundMode {
  kExactGraph,   // intersections from the induced edges of A
  kDegreesOnly,  // intersections bracketed from degrees alone
  kRefined       // degrees only, with adjacent-pair terms limited per node
};

std::string to_string(BoundMode mode);

struct BoundContext {
  int edges = 0;
  int k = 0;
  std::vector<int> degrees;  // whole-graph degree of each node of A
  /// Adjacency among A in local indices; present in exact-graph mode.
  std::optional<std::vector<std::uint32_t>> local_adjacency;

  static BoundContext from_graph(const Graph& g, NodeSet a, int k);
  static BoundContext from_degrees(std::vector<int> degrees, int edges, int k);

  int size() const { return static_cast<int>(degrees.size()); }
};

struct LedgerTerm {
  std::string description;
  int sign = 1;
  int argument = 0;            // i in C(e - i, k - i)
  std::int64_t multiplicity = 1;
  std::int64_t value = 0;      // C(e - i, k - i) for one term
};

struct BoundReport {
  std::int64_t bound_value = 0;
  BoundMode mode = BoundMode::kExactGraph;
  int k = 0;
  int edges = 0;
  std::vector<LedgerTerm> ledger;

  /// Signed sum of the ledger.
  std::int64_t ledger_sum() const;
};

/// |intersection_{v in S} M^k_v| for a subset S of A given as a mask over
/// local indices. Requires exact-graph context.
std::int64_t intersection_size(const BoundContext& ctx, std::uint32_t local_subset);

/// Inclusion-exclusion lower bound on m_k. `max_depth` truncates the
/// expansion; an odd depth is lowered by one so the last level subtracts.
BoundReport union_lower_bound(const BoundContext& ctx, BoundMode mode, std::optional<int> max_depth = std::nullopt);

struct RegularBounds {
  std::array<std::int64_t, 4> m;  // lower bounds on m_5 .. m_8
  bool odd_square_count = false;  // c/2 was floored
};

/// Closed-form bounds for 4-regular (8,16)-graphs in terms of the triangle
/// flag t and the number c of 4-cycles.
RegularBounds regular_lower_bounds(int triangle_flag, std::int64_t squares);

/// Candidate values for the number of k-sets that contain every edge
/// adjacent to uv but not uv itself.
struct EdgeCutTerm {
  std::int64_t formula_value = 0;    // C(e - du - dv + 1, k - du - dv)
  std::int64_t corrected_value = 0;  // C(e - du - dv + 1, k - du - dv + 2)
  std::optional<std::int64_t> table_value;
};

using EdgeTermTable = std::map<std::pair<int, int>, std::int64_t>;

EdgeCutTerm edge_cut_term(int deg_u, int deg_v, int k, int edges = 16, const EdgeTermTable* table = nullptr,
                          int table_k = 8);

/// Direct count, in g, of k-edge sets containing the boundary of the edge
/// at `edge_position` but not the edge itself; each is a cutset.
std::int64_t edge_cut_count(const Graph& g, int edge_position, int k);

/// Edge-type counts: a = (3,4), b = (3,5), c = (4,4), d = (4,5).
struct EdgeTypeCounts {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  std::int64_t sum = 0;
  auto operator<=>(const EdgeTypeCounts&) const = default;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
  bool contains(int x) const { return x >= lo && x <= hi; }
};

/// Linear constraints of the form used for the degree-(3,4,5) sequences:
/// a + b in ab_sum, d in d_range, a + b + c + d == total.
struct EdgeTypeConstraints {
  IntRange ab_sum;
  IntRange d_range;
  int total = 16;
};

struct EdgeTypeWeights {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;
};

/// Exact minimum of a*w_a + b*w_b + c*w_c + d*w_d over the nonnegative
/// integer points of the constraint set; ties go to the lexicographically
/// smallest (a, b, c, d). Throws GraphError when infeasible.
EdgeTypeCounts minimize_edge_sum(const EdgeTypeConstraints& constraints, const EdgeTypeWeights& weights);

/// Minimum of sum over edges of `weight(du, dv)` over every edge-type
/// count vector compatible with the degree sequence's stub counts (pairs
/// within a degree class at most C(n_d, 2), across classes at most
/// n_d * n_d'). A sound lower bound for every realisation.
std::int64_t minimize_edge_sum_for_sequence(const std::vector<int>& degrees, int edges,
                                            std::int64_t (*weight)(int, int, int), int k);

std::string bound_report_json(const BoundReport& report);

}  // namespace umrg

#endif
