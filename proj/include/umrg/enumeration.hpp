#ifndef UMRG_ENUMERATION_HPP
#define UMRG_ENUMERATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umrg/graph.hpp"

namespace umrg {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degrees sorted increasingly.
struct DegreeSequence {
  std::vector<int> degrees;

  int size() const { return static_cast<int>(degrees.size()); }
  int sum() const;
  int min() const { return degrees.empty() ? 0 : degrees.front(); }
  /// Number of entries equal to d (|V_d|).
  int count(int d) const;

  auto operator<=>(const DegreeSequence&) const = default;
};

/// Erdős–Gallai test; order of the input does not matter.
bool is_graphical(std::vector<int> degrees);

DegreeSequence degree_sequence(const Graph& g);

/// All nondecreasing sequences of length n with entries in
/// [min_deg, max_deg], summing to 2e, that pass Erdős–Gallai.
/// Returned in lexicographic order.
std::vector<DegreeSequence> graphical_sequences(int n, int e, int min_deg, int max_deg);

/// Canonical labelling: perm[v] is the canonical position of node v. The
/// canonical graph minimises the graph6 upper-triangle bitstring over all
/// orderings consistent with an isomorphism-invariant refinement of the
/// degree partition.
std::vector<int> canonical_labeling(const Graph& g);

/// graph6 bytes of the canonically relabelled graph; equal iff isomorphic.
std::string canonical_form(const Graph& g);

Graph canonical_graph(const Graph& g);

/// Order of the automorphism group.
std::int64_t automorphism_count(const Graph& g);

struct ClassFilter {
  int n = 0;
  int e = 0;
  bool connected = false;
  bool biconnected = false;
  bool regular = false;
  std::optional<int> min_degree;  // exact minimum degree
  std::optional<DegreeSequence> degree_sequence;
  /// Upper bound on backtracking leaves (degree-sequence backend) or
  /// augmentation candidates (edge backend).
  std::int64_t budget = 200'000'000;

  bool accepts(const Graph& g) const;
  /// Throws GraphError for inconsistent filters.
  void validate() const;
  std::string describe() const;
};

enum class Backend {
  kDegreeSequence,   // per-sequence adjacency backtracking with orbit pruning
  kEdgeAugmentation  // level-by-level edge addition from the empty graph
};

/// One canonical representative per isomorphism class accepted by the
/// filter, sorted by canonical form. `jobs` parallelises across degree
/// sequences; the output does not depend on it.
std::vector<Graph> enumerate_class(const ClassFilter& filter, Backend backend = Backend::kDegreeSequence,
                                   int jobs = 1);

struct Stratification {
  std::int64_t total = 0;
  std::map<int, std::int64_t> delta_counts;
  std::map<int, std::int64_t> biconnected_delta_counts;
  std::int64_t regular_count = 0;
  std::int64_t biconnected_count = 0;
};

Stratification stratify(const std::vector<Graph>& graphs);
Stratification stratify(const ClassFilter& filter, int jobs = 1);
std::string stratification_json(const Stratification& s, const ClassFilter& filter);

/// Default job count: UMRG_JOBS if set, else hardware concurrency.
int default_jobs();

}  // namespace umrg

#endif
