#ifndef UMRG_CLAIMS_HPP
#define UMRG_CLAIMS_HPP

// Expected constants loaded from the claims manifest (data/claims.json).
// Printed values live there so that a misprint is a data entry, not code.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umrg/bounds.hpp"

namespace umrg {

class ClaimsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sum of coefficient * C(e - argument, k - argument).
struct TermList {
  std::vector<std::pair<std::int64_t, int>> terms;  // (coefficient, argument)
};

struct CaseBound {
  std::string id;
  std::string location;
  int k = 8;
  std::int64_t printed = 0;
  bool reduce_min = false;
  bool below_target = false;  // not claimed to exceed the reference on its own
  std::vector<TermList> variants;
  std::vector<int> prefix;  // smallest degrees of graphs the case covers
  std::optional<bool> requires_degree3_adjacent;
  std::optional<BoundMode> rederive_mode;
  std::vector<int> rederive_degrees;
  std::string note;
};

struct EdgeSumClaim {
  std::string id;
  std::string location;
  std::vector<int> sequence;
  EdgeTypeConstraints constraints;
  EdgeTypeCounts printed;
};

struct FinalChain {
  std::string id;
  std::string location;
  std::string node_union;
  std::string edge_sum;
  std::array<std::int64_t, 2> printed_parts{};
  std::int64_t overlap = 0;
  std::int64_t printed = 0;
};

struct Claims {
  std::string source;
  int nodes = 8;
  int edges = 16;
  std::int64_t connected_classes = 0;
  std::int64_t regular_classes = 0;

  std::string k44_builder;
  std::vector<std::int64_t> k44_spectrum;
  std::int64_t k44_tree_number = 0;
  int full_binomial_from = 0;

  int table_edges = 16;
  std::map<int, std::vector<std::int64_t>> extension_table;  // k -> values for i = 1..6
  std::map<int, std::int64_t> k44_column;

  int edge_table_k = 8;
  EdgeTermTable edge_table;

  int k44_triangle_flag = 0;
  std::int64_t k44_squares = 0;
  std::array<std::int64_t, 4> k44_regular_bounds{};
  std::int64_t m8_base = 0;
  std::int64_t printed_gap = 0;
  bool printed_gap_uses_full_square_count = false;

  std::vector<CaseBound> case_bounds;
  std::vector<EdgeSumClaim> edge_sums;
  std::vector<FinalChain> final_chains;

  const CaseBound& case_bound(const std::string& id) const;
  const EdgeSumClaim& edge_sum(const std::string& id) const;
};

/// Manifest path: UMRG_CLAIMS if set, else the path baked in at build time.
std::string default_claims_path();

Claims load_claims(const std::string& path);
Claims parse_claims(const std::string& json_text, const std::string& source = "<memory>");

/// Evaluates a term list exactly at (k, e).
std::int64_t evaluate_terms(const TermList& t, int k, int e);

/// Same, but reading C(e - i, k - i) from a printed table where it has an
/// entry (arguments 1..6), and exactly elsewhere.
std::int64_t evaluate_terms_with_table(const TermList& t, int k, int e,
                                       const std::map<int, std::vector<std::int64_t>>& table);

}  // namespace umrg

#endif
