#include "umrg/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "umrg/census.hpp"
#include "umrg/graph6.hpp"
#include "umrg/parallel.hpp"

namespace umrg {

int DegreeSequence::sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

int DegreeSequence::count(int d) const {
  return static_cast<int>(std::count(degrees.begin(), degrees.end(), d));
}

bool is_graphical(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  const auto n = static_cast<long long>(degrees.size());
  long long total = 0;
  for (int d : degrees) {
    if (d < 0 || d > n - 1) return false;
    total += d;
  }
  if (total % 2 != 0) return false;
  long long prefix = 0;
  for (long long k = 1; k <= n; ++k) {
    prefix += degrees[static_cast<std::size_t>(k - 1)];
    long long tail = 0;
    for (long long i = k; i < n; ++i) tail += std::min<long long>(degrees[static_cast<std::size_t>(i)], k);
    if (prefix > k * (k - 1) + tail) return false;
  }
  return true;
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence s;
  for (int v = 0; v < g.node_count(); ++v) s.degrees.push_back(g.degree(v));
  std::sort(s.degrees.begin(), s.degrees.end());
  return s;
}

std::vector<DegreeSequence> graphical_sequences(int n, int e, int min_deg, int max_deg) {
  std::vector<DegreeSequence> out;
  if (n < 0 || n > kMaxNodes) throw GraphError("graphical_sequences: n out of range");
  min_deg = std::max(min_deg, 0);
  max_deg = std::min(max_deg, n - 1);
  const int target = 2 * e;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int lowest, int sum) {
    const int placed = static_cast<int>(current.size());
    if (placed == n) {
      if (sum == target && is_graphical(current)) out.push_back({current});
      return;
    }
    const int left = n - placed;
    for (int d = lowest; d <= max_deg; ++d) {
      if (sum + d * left > target) break;
      if (sum + d + (left - 1) * max_deg < target) continue;
      current.push_back(d);
      extend(d, sum + d);
      current.pop_back();
    }
  };
  if (min_deg <= max_deg) extend(min_deg, 0);
  return out;
}

namespace {

// Ordered colour classes from iterated neighbourhood-signature refinement,
// starting from degrees. Colours are ranks of label-independent signatures.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (int w : g.neighbors(v).members()) around.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
    }
    auto distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[static_cast<std::size_t>(v)]) - distinct.begin());
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return color;
}

struct CanonicalSearch {
  const Graph& g;
  int n;
  std::vector<int> position_color;  // colour required at each position
  std::vector<int> node_color;
  std::vector<int> order;           // order[p] = node at position p
  std::vector<std::uint32_t> columns;
  std::vector<int> best_order;
  std::vector<std::uint32_t> best_columns;
  bool have_best = false;
  std::int64_t best_hits = 0;
  std::uint32_t used = 0;

  explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.node_count()) {
    node_color = refined_colors(g);
    position_color = node_color;
    std::sort(position_color.begin(), position_color.end());
    order.resize(static_cast<std::size_t>(n));
    columns.resize(static_cast<std::size_t>(n));
  }

  // -1: prefix [0, p] smaller than best; 0: equal; 1: larger.
  int compare_prefix(int p) const {
    for (int i = 0; i <= p; ++i) {
      if (columns[static_cast<std::size_t>(i)] != best_columns[static_cast<std::size_t>(i)])
        return columns[static_cast<std::size_t>(i)] < best_columns[static_cast<std::size_t>(i)] ? -1 : 1;
    }
    return 0;
  }

  void run(int p) {
    if (p == n) {
      if (!have_best || compare_prefix(n - 1) < 0) {
        best_order = order;
        best_columns = columns;
        have_best = true;
        best_hits = 1;
      } else {
        ++best_hits;
      }
      return;
    }
    const int wanted = position_color[static_cast<std::size_t>(p)];
    for (int v = 0; v < n; ++v) {
      if (((used >> v) & 1U) || node_color[static_cast<std::size_t>(v)] != wanted) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < p; ++i) col = (col << 1) | (g.adjacent(order[static_cast<std::size_t>(i)], v) ? 1U : 0U);
      order[static_cast<std::size_t>(p)] = v;
      columns[static_cast<std::size_t>(p)] = col;
      if (have_best && compare_prefix(p) > 0) continue;
      used |= std::uint32_t{1} << v;
      run(p + 1);
      used &= ~(std::uint32_t{1} << v);
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  CanonicalSearch search(g);
  search.run(0);
  std::vector<int> perm(static_cast<std::size_t>(g.node_count()));
  for (int p = 0; p < g.node_count(); ++p) perm[static_cast<std::size_t>(search.best_order[static_cast<std::size_t>(p)])] = p;
  return perm;
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

std::int64_t automorphism_count(const Graph& g) {
  CanonicalSearch search(g);
  search.run(0);
  return search.best_hits;
}

bool ClassFilter::accepts(const Graph& g) const {
  if (g.node_count() != n || g.edge_count() != e) return false;
  const auto seq = umrg::degree_sequence(g);
  if (regular && seq.min() != seq.degrees.back()) return false;
  if (min_degree && seq.min() != *min_degree) return false;
  if (degree_sequence && seq != *degree_sequence) return false;
  if (connected && !is_connected(g)) return false;
  if (biconnected && !connectivity_census(g).biconnected) return false;
  return true;
}

void ClassFilter::validate() const {
  if (n < 1 || n > kMaxNodes) throw GraphError("filter: n must be in [1, 32]");
  if (e < 0 || e > n * (n - 1) / 2) throw GraphError("filter: e out of range for n");
  if (regular && (2 * e) % n != 0) throw GraphError("filter: regular class needs n | 2e");
  if (degree_sequence && (degree_sequence->size() != n || degree_sequence->sum() != 2 * e))
    throw GraphError("filter: degree sequence inconsistent with (n, e)");
  if (budget < 1) throw GraphError("filter: budget must be positive");
}

std::string ClassFilter::describe() const {
  std::ostringstream os;
  os << "(" << n << "," << e << ")-graphs";
  if (biconnected) os << ", biconnected";
  else if (connected) os << ", connected";
  if (regular) os << ", regular";
  if (min_degree) os << ", min degree " << *min_degree;
  if (degree_sequence) {
    os << ", degrees (";
    for (std::size_t i = 0; i < degree_sequence->degrees.size(); ++i) os << (i ? "," : "") << degree_sequence->degrees[i];
    os << ")";
  }
  return os.str();
}

namespace {

std::vector<DegreeSequence> sequences_for(const ClassFilter& f) {
  int lo = f.min_degree.value_or((f.connected || f.biconnected) && f.n > 1 ? 1 : 0);
  if (f.biconnected && !f.min_degree) lo = std::max(lo, 2);
  auto all = graphical_sequences(f.n, f.e, lo, f.n - 1);
  std::vector<DegreeSequence> out;
  for (auto& s : all) {
    if (f.min_degree && s.min() != *f.min_degree) continue;
    if (f.regular && s.min() != s.degrees.back()) continue;
    if (f.degree_sequence && s != *f.degree_sequence) continue;
    out.push_back(std::move(s));
  }
  return out;
}

// Realises one degree sequence row by row. When row i picks its
// neighbours, unprocessed nodes with equal target degree and equal
// adjacency to rows < i are interchangeable, so only the lowest-indexed
// members of each such class are used.
class SequenceRealiser {
 public:
  SequenceRealiser(const ClassFilter& filter, const DegreeSequence& seq, std::atomic<std::int64_t>& leaves)
      : filter_(filter), target_(seq.degrees), n_(filter.n), leaves_(leaves) {
    adj_.assign(static_cast<std::size_t>(n_), 0);
    remaining_ = target_;
  }

  std::set<std::string> run() {
    row(0);
    return std::move(found_);
  }

 private:
  void row(int i) {
    if (i == n_) {
      if (++leaves_ > filter_.budget) throw BudgetExceeded("enumeration budget exceeded");
      std::vector<Edge> edges;
      for (int v = 0; v < n_; ++v)
        for (int w = v + 1; w < n_; ++w)
          if ((adj_[static_cast<std::size_t>(v)] >> w) & 1U) edges.push_back({v, w});
      Graph g(n_, edges);
      if (filter_.accepts(g)) found_.insert(canonical_form(g));
      return;
    }
    const std::uint32_t done_mask = (std::uint32_t{1} << i) - 1;
    // Classes of later nodes that still need edges.
    std::vector<std::vector<int>> classes;
    std::vector<std::pair<int, std::uint32_t>> keys;
    for (int j = i + 1; j < n_; ++j) {
      if (remaining_[static_cast<std::size_t>(j)] == 0) continue;
      const std::pair<int, std::uint32_t> key{target_[static_cast<std::size_t>(j)], adj_[static_cast<std::size_t>(j)] & done_mask};
      auto it = std::find(keys.begin(), keys.end(), key);
      if (it == keys.end()) {
        keys.push_back(key);
        classes.push_back({j});
      } else {
        classes[static_cast<std::size_t>(it - keys.begin())].push_back(j);
      }
    }
    choose(i, 0, classes, remaining_[static_cast<std::size_t>(i)]);
  }

  void choose(int i, std::size_t cls, const std::vector<std::vector<int>>& classes, int need) {
    if (need == 0) {
      if (!residual_ok(i)) return;
      row(i + 1);
      return;
    }
    if (cls == classes.size()) return;
    int capacity = 0;
    for (std::size_t c = cls; c < classes.size(); ++c) capacity += static_cast<int>(classes[c].size());
    if (capacity < need) return;
    const auto& members = classes[cls];
    const int max_take = std::min<int>(need, static_cast<int>(members.size()));
    for (int take = max_take; take >= 0; --take) {
      for (int t = 0; t < take; ++t) link(i, members[static_cast<std::size_t>(t)], +1);
      choose(i, cls + 1, classes, need - take);
      for (int t = 0; t < take; ++t) link(i, members[static_cast<std::size_t>(t)], -1);
    }
  }

  void link(int u, int v, int direction) {
    adj_[static_cast<std::size_t>(u)] ^= std::uint32_t{1} << v;
    adj_[static_cast<std::size_t>(v)] ^= std::uint32_t{1} << u;
    remaining_[static_cast<std::size_t>(u)] -= direction;
    remaining_[static_cast<std::size_t>(v)] -= direction;
  }

  bool residual_ok(int i) const {
    std::vector<int> rest(remaining_.begin() + i + 1, remaining_.end());
    return is_graphical(rest);
  }

  const ClassFilter& filter_;
  std::vector<int> target_;
  int n_;
  std::atomic<std::int64_t>& leaves_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> remaining_;
  std::set<std::string> found_;
};

std::set<std::string> by_degree_sequence(const ClassFilter& f, int jobs) {
  const auto sequences = sequences_for(f);
  std::vector<std::set<std::string>> parts(sequences.size());
  std::atomic<std::int64_t> leaves{0};
  parallel_for(sequences.size(), jobs, [&](std::size_t i) {
    SequenceRealiser realiser(f, sequences[i], leaves);
    parts[i] = realiser.run();
  });
  std::set<std::string> merged;
  for (auto& p : parts) merged.merge(p);
  return merged;
}

std::set<std::string> by_edge_augmentation(const ClassFilter& f) {
  std::set<std::string> level{canonical_form(Graph(f.n, std::initializer_list<Edge>{}))};
  std::int64_t candidates = 0;
  for (int edges = 0; edges < f.e; ++edges) {
    std::set<std::string> next;
    for (const auto& code : level) {
      const Graph g = from_graph6(code);
      std::vector<Edge> base(g.edges().begin(), g.edges().end());
      for (int v = 1; v < f.n; ++v) {
        for (int u = 0; u < v; ++u) {
          if (g.adjacent(u, v)) continue;
          if (++candidates > f.budget) throw BudgetExceeded("enumeration budget exceeded");
          base.push_back({u, v});
          next.insert(canonical_form(Graph(f.n, base)));
          base.pop_back();
        }
      }
    }
    level = std::move(next);
  }
  std::set<std::string> out;
  for (const auto& code : level)
    if (f.accepts(from_graph6(code))) out.insert(code);
  return out;
}

}  // namespace

std::vector<Graph> enumerate_class(const ClassFilter& filter, Backend backend, int jobs) {
  filter.validate();
  const auto codes = backend == Backend::kDegreeSequence ? by_degree_sequence(filter, jobs) : by_edge_augmentation(filter);
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& code : codes) out.push_back(from_graph6(code));
  return out;
}

Stratification stratify(const std::vector<Graph>& graphs) {
  Stratification s;
  for (const auto& g : graphs) {
    const auto census = structural_census(g);
    const bool bicon = connectivity_census(g).biconnected;
    ++s.total;
    ++s.delta_counts[census.min_degree];
    if (census.is_regular) ++s.regular_count;
    if (bicon) {
      ++s.biconnected_count;
      ++s.biconnected_delta_counts[census.min_degree];
    }
  }
  return s;
}

Stratification stratify(const ClassFilter& filter, int jobs) {
  return stratify(enumerate_class(filter, Backend::kDegreeSequence, jobs));
}

std::string stratification_json(const Stratification& s, const ClassFilter& filter) {
  nlohmann::ordered_json j;
  j["class"] = filter.describe();
  j["total"] = s.total;
  nlohmann::ordered_json delta = nlohmann::ordered_json::object();
  for (auto [d, c] : s.delta_counts) delta[std::to_string(d)] = c;
  j["delta_counts"] = delta;
  nlohmann::ordered_json bdelta = nlohmann::ordered_json::object();
  for (auto [d, c] : s.biconnected_delta_counts) bdelta[std::to_string(d)] = c;
  j["biconnected_delta_counts"] = bdelta;
  j["regular_count"] = s.regular_count;
  j["biconnected_count"] = s.biconnected_count;
  return j.dump(2);
}

int default_jobs() {
  if (const char* env = std::getenv("UMRG_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

}  // namespace umrg
