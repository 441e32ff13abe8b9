#include "umrg/bounds.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"
#include "umrg/arith.hpp"
#include "umrg/census.hpp"

namespace umrg {

namespace {

constexpr int kMaxBoundNodes = 24;

int pairs_of(int s) { return s * (s - 1) / 2; }

void check_context(const BoundContext& ctx) {
  if (ctx.degrees.empty()) throw GraphError("bound context needs a nonempty node set");
  if (ctx.size() > kMaxBoundNodes) throw GraphError("bound context node set too large");
  if (ctx.edges < 1) throw GraphError("bound context needs at least one edge");
  if (ctx.k < 0 || ctx.k > ctx.edges) throw GraphError("cut size outside [0, e]");
  for (int d : ctx.degrees) {
    if (d < 1) throw GraphError("bound context degrees must be at least 1");
    if (d > ctx.edges) throw GraphError("degree exceeds edge count");
  }
  if (ctx.local_adjacency && static_cast<int>(ctx.local_adjacency->size()) != ctx.size())
    throw GraphError("adjacency size does not match node set");
}

// Signed terms grouped by (level, argument, kind) so the ledger stays short.
class LedgerBuilder {
 public:
  LedgerBuilder(int k, int e) : k_(k), e_(e) {}

  void add(int level, int argument, const std::string& kind, std::int64_t count = 1) {
    auto& slot = groups_[{level, argument, kind}];
    slot = checked_add(slot, count);
  }

  BoundReport finish(BoundMode mode) const {
    BoundReport r;
    r.mode = mode;
    r.k = k_;
    r.edges = e_;
    for (const auto& [key, count] : groups_) {
      const auto& [level, argument, kind] = key;
      LedgerTerm t;
      std::ostringstream desc;
      desc << "|S|=" << level << " " << kind << " i=" << argument;
      t.description = desc.str();
      t.sign = level % 2 == 1 ? 1 : -1;
      t.argument = argument;
      t.multiplicity = count;
      t.value = extension_count(k_, argument, e_);
      r.ledger.push_back(std::move(t));
    }
    r.bound_value = r.ledger_sum();
    return r;
  }

 private:
  int k_;
  int e_;
  std::map<std::tuple<int, int, std::string>, std::int64_t> groups_;
};

int effective_depth(int size, std::optional<int> max_depth) {
  if (!max_depth) return size;
  if (*max_depth < 1) throw GraphError("truncation depth must be at least 1");
  if (*max_depth >= size) return size;
  int depth = *max_depth;
  if (depth % 2 == 1) --depth;
  if (depth < 1) throw GraphError("truncation depth 1 gives no valid lower bound; use depth >= 2");
  return depth;
}

int degree_sum(const BoundContext& ctx, std::uint32_t subset) {
  int s = 0;
  for (std::uint32_t m = subset; m; m &= m - 1) s += ctx.degrees[std::countr_zero(m)];
  return s;
}

int local_induced_edges(const std::vector<std::uint32_t>& adj, std::uint32_t subset) {
  int twice = 0;
  for (std::uint32_t m = subset; m; m &= m - 1) twice += std::popcount(adj[std::countr_zero(m)] & subset);
  return twice / 2;
}

// Largest total weight of a simple graph on the pair list with per-node
// degree caps; returns the chosen pair indices.
std::vector<int> max_capped_pairs(const std::vector<std::pair<int, int>>& pairs, const std::vector<std::int64_t>& weight,
                                  std::vector<int> caps) {
  std::vector<int> order;
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p)
    if (weight[p] > 0) order.push_back(p);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return weight[x] > weight[y]; });
  std::vector<std::int64_t> suffix(order.size() + 1, 0);
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + weight[order[i]];

  std::int64_t best = -1;
  std::vector<int> best_set, current;
  std::function<void(std::size_t, std::int64_t)> search = [&](std::size_t i, std::int64_t total) {
    if (total + suffix[i] <= best) return;
    if (i == order.size()) {
      best = total;
      best_set = current;
      return;
    }
    const auto [u, v] = pairs[order[i]];
    if (caps[u] > 0 && caps[v] > 0) {
      --caps[u];
      --caps[v];
      current.push_back(order[i]);
      search(i + 1, total + weight[order[i]]);
      current.pop_back();
      ++caps[u];
      ++caps[v];
    }
    search(i + 1, total);
  };
  search(0, 0);
  return best_set;
}

}  // namespace

std::int64_t extension_count(int k, int i, int e) {
  if (i < 0) throw GraphError("forced edge count must be nonnegative");
  return binomial(e - i, k - i);
}

std::string to_string(BoundMode mode) {
  switch (mode) {
    case BoundMode::kExactGraph: return "exact-graph";
    case BoundMode::kDegreesOnly: return "degrees-only";
    case BoundMode::kRefined: return "refined";
  }
  return "unknown";
}

BoundContext BoundContext::from_graph(const Graph& g, NodeSet a, int k) {
  BoundContext ctx;
  ctx.edges = g.edge_count();
  ctx.k = k;
  const auto members = a.members();
  std::vector<int> local(g.node_count(), -1);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    if (members[i] >= g.node_count()) throw GraphError("node set exceeds graph");
    local[members[i]] = i;
  }
  std::vector<std::uint32_t> adj(members.size(), 0);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    ctx.degrees.push_back(g.degree(members[i]));
    for (int w : g.neighbors(members[i]).members())
      if (local[w] >= 0) adj[i] |= 1u << local[w];
  }
  ctx.local_adjacency = std::move(adj);
  check_context(ctx);
  return ctx;
}

BoundContext BoundContext::from_degrees(std::vector<int> degrees, int edges, int k) {
  BoundContext ctx;
  ctx.edges = edges;
  ctx.k = k;
  ctx.degrees = std::move(degrees);
  check_context(ctx);
  // The edges touching A number at least sum(deg) - C(|A|, 2).
  const int touching = std::accumulate(ctx.degrees.begin(), ctx.degrees.end(), 0) - pairs_of(ctx.size());
  if (touching > edges) throw GraphError("degree data cannot fit in the edge count");
  return ctx;
}

std::int64_t BoundReport::ledger_sum() const {
  std::int64_t s = 0;
  for (const auto& t : ledger) s = checked_add(s, t.sign * checked_mul(t.multiplicity, t.value));
  return s;
}

std::int64_t intersection_size(const BoundContext& ctx, std::uint32_t local_subset) {
  if (!ctx.local_adjacency) throw GraphError("intersection size needs induced-edge data");
  if (local_subset == 0 || (ctx.size() < 32 && local_subset >> ctx.size()))
    throw GraphError("subset must be a nonempty subset of the node set");
  const int forced = degree_sum(ctx, local_subset) - local_induced_edges(*ctx.local_adjacency, local_subset);
  return extension_count(ctx.k, forced, ctx.edges);
}

BoundReport union_lower_bound(const BoundContext& ctx, BoundMode mode, std::optional<int> max_depth) {
  check_context(ctx);
  if (mode == BoundMode::kExactGraph && !ctx.local_adjacency)
    throw GraphError("exact-graph bound needs induced-edge data");
  const int n = ctx.size();
  const int depth = effective_depth(n, max_depth);
  LedgerBuilder ledger(ctx.k, ctx.edges);

  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    const int level = std::popcount(s);
    if (level > depth) continue;
    if (mode == BoundMode::kRefined && level == 2) continue;
    const int sum = degree_sum(ctx, s);
    if (mode == BoundMode::kExactGraph) {
      ledger.add(level, sum - local_induced_edges(*ctx.local_adjacency, s), "subsets");
    } else if (level % 2 == 1) {
      ledger.add(level, sum, "subsets, no shared edges");
    } else {
      ledger.add(level, sum - std::min(ctx.k, pairs_of(level)), "subsets, densest case");
    }
  }

  if (mode == BoundMode::kRefined && depth >= 2) {
    // Pair terms: adjacency lowers the forced count by one. Each node has at
    // most min(deg, |A| - 1) neighbours inside A, so only a degree-capped
    // set of pairs can take the larger value.
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::int64_t> gain;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const int sum = ctx.degrees[u] + ctx.degrees[v];
        pairs.emplace_back(u, v);
        gain.push_back(extension_count(ctx.k, sum - 1, ctx.edges) - extension_count(ctx.k, sum, ctx.edges));
      }
    std::vector<int> caps(n);
    for (int u = 0; u < n; ++u) caps[u] = std::min(ctx.degrees[u], n - 1);
    const auto chosen = max_capped_pairs(pairs, gain, caps);
    std::vector<bool> adjacent(pairs.size(), false);
    for (int p : chosen) adjacent[p] = true;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const int sum = ctx.degrees[pairs[p].first] + ctx.degrees[pairs[p].second];
      if (adjacent[p])
        ledger.add(2, sum - 1, "pairs, taken adjacent");
      else
        ledger.add(2, sum, "pairs, taken non-adjacent");
    }
  }
  return ledger.finish(mode);
}

RegularBounds regular_lower_bounds(int triangle_flag, std::int64_t squares) {
  if (triangle_flag != 0 && triangle_flag != 1) throw GraphError("triangle flag must be 0 or 1");
  if (squares < 0) throw GraphError("square count must be nonnegative");
  constexpr int n = 8, e = 16, d = 4;
  RegularBounds r;
  // Single nodes; an edge uv with its six neighbouring edges; for k = 7 the
  // two stars of an edge share one 7-set, and for k = 8 stars coincide in
  // pairs as counted by non-edges and edges.
  r.m[0] = n * binomial(e - d, 1);
  r.m[1] = n * binomial(e - d, 2) + e;
  r.m[2] = n * binomial(e - d, 3) - e + e * binomial(e - 7, 1);
  r.m[3] = n * binomial(e - d, 4) - (binomial(n, 2) - e) - e * (e - 7) + e * binomial(e - 7, 2) +
           n * binomial(d, 2) + triangle_flag * 3 * binomial(e - 8, 2) + squares / 2;
  r.odd_square_count = squares % 2 != 0;
  return r;
}

EdgeCutTerm edge_cut_term(int deg_u, int deg_v, int k, int edges, const EdgeTermTable* table, int table_k) {
  if (deg_u < 1 || deg_v < 1) throw GraphError("degrees must be at least 1");
  EdgeCutTerm t;
  const int pool = edges - deg_u - deg_v + 1;
  t.formula_value = binomial(pool, k - deg_u - deg_v);
  t.corrected_value = binomial(pool, k - deg_u - deg_v + 2);
  if (table && k == table_k) {
    auto it = table->find({std::min(deg_u, deg_v), std::max(deg_u, deg_v)});
    if (it != table->end()) t.table_value = it->second;
  }
  return t;
}

std::int64_t edge_cut_count(const Graph& g, int edge_position, int k) {
  if (edge_position < 0 || edge_position >= g.edge_count()) throw GraphError("edge position out of range");
  if (g.edge_count() > 30) throw GraphError("edge cut count limited to 30 edges");
  const auto [u, v] = g.edge(edge_position);
  std::uint32_t forced = 0;
  for (int p = 0; p < g.edge_count(); ++p) {
    const auto [a, b] = g.edge(p);
    if (p != edge_position && (a == u || a == v || b == u || b == v)) forced |= 1u << p;
  }
  const int e = g.edge_count();
  const int need = k - std::popcount(forced);
  // Brute force over the free edges, testing disconnection directly.
  std::int64_t count = 0;
  if (need < 0) return 0;
  std::vector<int> free_edges;
  for (int p = 0; p < e; ++p)
    if (p != edge_position && !(forced >> p & 1)) free_edges.push_back(p);
  const int f = static_cast<int>(free_edges.size());
  if (need > f) return 0;
  std::vector<bool> pick(f, false);
  std::fill(pick.begin(), pick.begin() + need, true);
  do {
    std::vector<std::uint32_t> adj(g.node_count(), 0);
    std::uint32_t removed = forced;
    for (int i = 0; i < f; ++i)
      if (pick[i]) removed |= 1u << free_edges[i];
    for (int p = 0; p < e; ++p) {
      if (removed >> p & 1) continue;
      const auto [a, b] = g.edge(p);
      adj[a] |= 1u << b;
      adj[b] |= 1u << a;
    }
    if (!is_connected_within(adj, g.all_nodes())) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

EdgeTypeCounts minimize_edge_sum(const EdgeTypeConstraints& constraints, const EdgeTypeWeights& weights) {
  std::optional<EdgeTypeCounts> best;
  const int total = constraints.total;
  for (int a = 0; a <= total; ++a)
    for (int b = 0; a + b <= total; ++b) {
      if (!constraints.ab_sum.contains(a + b)) continue;
      for (int d = 0; a + b + d <= total; ++d) {
        if (!constraints.d_range.contains(d)) continue;
        const int c = total - a - b - d;
        EdgeTypeCounts t{a, b, c, d, a * weights.a + b * weights.b + c * weights.c + d * weights.d};
        if (!best || t.sum < best->sum ||
            (t.sum == best->sum && std::tie(t.a, t.b, t.c, t.d) < std::tie(best->a, best->b, best->c, best->d)))
          best = t;
      }
    }
  if (!best) throw GraphError("edge-type constraints are infeasible");
  return *best;
}

std::int64_t minimize_edge_sum_for_sequence(const std::vector<int>& degrees, int edges,
                                            std::int64_t (*weight)(int, int, int), int k) {
  std::map<int, int> classes;
  for (int d : degrees) ++classes[d];
  std::vector<int> deg;
  std::vector<int> size;
  for (auto [d, c] : classes) {
    deg.push_back(d);
    size.push_back(c);
  }
  const int m = static_cast<int>(deg.size());
  std::vector<std::pair<int, int>> types;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) types.emplace_back(i, j);

  std::vector<int> stubs(m);
  for (int i = 0; i < m; ++i) stubs[i] = deg[i] * size[i];
  std::optional<std::int64_t> best;
  std::vector<int> counts(types.size(), 0);
  std::function<void(std::size_t, int, std::int64_t)> scan = [&](std::size_t t, int used, std::int64_t total) {
    if (t == types.size()) {
      if (used != edges) return;
      if (std::any_of(stubs.begin(), stubs.end(), [](int s) { return s != 0; })) return;
      if (!best || total < *best) best = total;
      return;
    }
    const auto [i, j] = types[t];
    const int limit = i == j ? size[i] * (size[i] - 1) / 2 : size[i] * size[j];
    const std::int64_t w = weight(deg[i], deg[j], k);
    for (int x = 0; x <= limit && used + x <= edges; ++x) {
      const int take_i = i == j ? 2 * x : x;
      if (stubs[i] < take_i || stubs[j] < x) break;
      stubs[i] -= take_i;
      if (i != j) stubs[j] -= x;
      scan(t + 1, used + x, total + x * w);
      stubs[i] += take_i;
      if (i != j) stubs[j] += x;
    }
  };
  scan(0, 0, 0);
  if (!best) throw GraphError("degree sequence admits no edge-type assignment");
  return *best;
}

std::string bound_report_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(report.mode);
  j["k"] = report.k;
  j["edges"] = report.edges;
  j["bound_value"] = report.bound_value;
  auto& terms = j["ledger"] = nlohmann::ordered_json::array();
  for (const auto& t : report.ledger) {
    terms.push_back({{"description", t.description},
                     {"sign", t.sign},
                     {"argument", t.argument},
                     {"multiplicity", t.multiplicity},
                     {"value", t.value}});
  }
  return j.dump(2);
}

}  // namespace umrg
