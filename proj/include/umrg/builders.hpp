#ifndef UMRG_BUILDERS_HPP
#define UMRG_BUILDERS_HPP

#include <array>
#include <string_view>
#include <vector>

#include "umrg/graph.hpp"

namespace umrg {

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(std::span<const int> parts);
Graph cycle(int n);
Graph path(int n);

/// Two hub nodes joined by three internally disjoint paths with the given
/// edge lengths. At most one length may be 1.
Graph theta(int l1, int l2, int l3);

/// Cycle C_{2m} plus the m chords joining opposite nodes (m >= 2).
Graph moebius(int m);

Graph petersen();
Graph complement_of(const Graph& g);

/// K_n with the matching {01, 23, ...} of the given size removed.
Graph kn_minus_matching(int n, int match_size);

/// Subdivision counts for the six K_4 edges in the order
/// 01, 02, 03, 12, 13, 23 used by boesch_n_plus_2.
std::array<int, 6> boesch_insertions(int n);

/// The (n, n+2) graph obtained by inserting n-4 points on the edges of K_4
/// so that per-edge counts differ by at most one, and any two perfect
/// matchings receiving equal totals carry identical per-edge counts.
/// Ties are broken by the lexicographically smallest insertion vector.
Graph boesch_n_plus_2(int n);

/// Parses "family:args", e.g. "complete_bipartite:4,4", "moebius:4",
/// "petersen", "complement_of:cycle:7", "complete_multipartite:2,2,2".
Graph build_named(std::string_view spec);

}  // namespace umrg

#endif
