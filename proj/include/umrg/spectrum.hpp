#ifndef UMRG_SPECTRUM_HPP
#define UMRG_SPECTRUM_HPP

/// Cutset spectra and the all-terminal unreliability polynomial
///
///   U(rho) = sum_k m_k rho^k (1 - rho)^(e - k),
///
/// where m_k counts the k-edge subsets whose removal disconnects the graph.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umrg/graph.hpp"

namespace umrg {

class SpectrumError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Largest edge count accepted by the exhaustive 2^e enumerations.
inline constexpr int kMaxSpectrumEdges = 28;

struct CutsetSpectrum {
  int nodes = 0;
  int edges = 0;
  std::vector<std::int64_t> m;  // size edges + 1

  std::int64_t operator[](int k) const { return m.at(static_cast<std::size_t>(k)); }

  /// Smallest k with m_k > 0; nullopt when there is no cutset at all.
  std::optional<int> first_nonzero() const;

  bool operator==(const CutsetSpectrum&) const = default;
};

/// Exhaustive Gray-code walk over all edge subsets, testing connectivity of
/// G - S after each single-edge toggle. `jobs` > 1 splits the walk by a fixed
/// prefix of high edge bits; the result does not depend on `jobs`.
/// Throws SpectrumError for disconnected input or more than 28 edges.
CutsetSpectrum cutset_spectrum(const Graph& g, int jobs = 1);

/// counts[j] = number of j-edge subsets forming a connected spanning
/// subgraph, by a dynamic program over node subsets (at most 16 nodes).
std::vector<std::int64_t> connected_spanning_counts(const Graph& g);

/// Spectrum derived from connected_spanning_counts by complementation.
CutsetSpectrum spectrum_by_complement(const Graph& g);

/// Counts k-cutsets as the union, over connected node sets H of order at
/// most n/2 with |dH| <= k, of the k-sets containing dH whose removal keeps
/// H internally connected. Requires a connected graph with n <= 8.
std::int64_t spectrum_via_components(const Graph& g, int k);

/// Kirchhoff count of spanning trees via fraction-free elimination.
/// Throws OverflowError when the value leaves 64 bits.
std::int64_t tree_number(const Graph& g);

/// Minimum over t of the unit-capacity max flow between node 0 and t.
int edge_connectivity(const Graph& g);

/// lambda-regular and m_lambda == n.
bool is_superconnected(const Graph& g);
bool is_superconnected(const Graph& g, const CutsetSpectrum& s);

/// Evaluates the unreliability polynomial with compensated summation of the
/// nonnegative Bernstein terms. Throws std::domain_error for rho outside [0,1].
double unreliability(const CutsetSpectrum& s, double rho);

enum class Winner { kFirst, kSecond, kTie };

struct Comparison {
  bool dominates = false;                // a.m[k] <= b.m[k] for every k
  std::optional<int> first_divergence;   // smallest k with a.m[k] != b.m[k]
  std::optional<int> last_divergence;
  Winner near_zero_winner = Winner::kTie; // smaller m at first divergence
  Winner near_one_winner = Winner::kTie;  // smaller m at last divergence
};

Comparison compare(const CutsetSpectrum& a, const CutsetSpectrum& b);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
  std::int64_t failures = 0;
};

/// Independent Bernoulli(rho) edge deletions; deterministic for a seed.
MonteCarloEstimate monte_carlo_unreliability(const Graph& g, double rho, std::int64_t trials,
                                             std::uint64_t seed);

std::string spectrum_csv(const CutsetSpectrum& s);
std::string spectrum_json(const CutsetSpectrum& s, const std::string& graph6 = {});
std::string evaluation_table_csv(const CutsetSpectrum& s, std::span<const double> rhos);

}  // namespace umrg

#endif
