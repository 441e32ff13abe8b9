#include "umrg/spectrum.hpp"

#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "json.hpp"

#include "umrg/arith.hpp"
#include "umrg/census.hpp"

namespace umrg {

std::optional<int> CutsetSpectrum::first_nonzero() const {
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k] > 0) return static_cast<int>(k);
  return std::nullopt;
}

namespace {

void require_spectrum_input(const Graph& g) {
  if (g.edge_count() > kMaxSpectrumEdges)
    throw SpectrumError("spectrum: more than " + std::to_string(kMaxSpectrumEdges) + " edges exceeds the enumeration budget");
  if (!is_connected(g)) throw SpectrumError("spectrum: graph is disconnected");
}

// Counts disconnected G - S over all S whose bits above `low_bits` equal
// `prefix`, walking the low bits in Gray-code order.
std::vector<std::int64_t> walk_chunk(const Graph& g, int low_bits, std::uint32_t prefix) {
  const int e = g.edge_count();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(e + 1), 0);
  std::vector<std::uint32_t> adj(g.adjacency().begin(), g.adjacency().end());
  const NodeSet all = g.all_nodes();

  const auto toggle = [&](int position) {
    auto [u, v] = g.edge(position);
    adj[static_cast<std::size_t>(u)] ^= std::uint32_t{1} << v;
    adj[static_cast<std::size_t>(v)] ^= std::uint32_t{1} << u;
  };

  int removed = 0;
  for (int b = low_bits; b < e; ++b) {
    if ((prefix >> (b - low_bits)) & 1U) {
      toggle(b);
      ++removed;
    }
  }
  std::uint32_t state = 0;
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 0; i < steps; ++i) {
    if (i != 0) {
      const int b = std::countr_zero(i);
      toggle(b);
      state ^= std::uint32_t{1} << b;
      removed += ((state >> b) & 1U) ? 1 : -1;
    }
    if (!is_connected_within(adj, all)) ++counts[static_cast<std::size_t>(removed)];
  }
  return counts;
}

}  // namespace

CutsetSpectrum cutset_spectrum(const Graph& g, int jobs) {
  require_spectrum_input(g);
  const int e = g.edge_count();
  CutsetSpectrum out{g.node_count(), e, std::vector<std::int64_t>(static_cast<std::size_t>(e + 1), 0)};

  int prefix_bits = 0;
  while (prefix_bits < e && prefix_bits < 6 && (1 << prefix_bits) < jobs) ++prefix_bits;
  const int low_bits = e - prefix_bits;
  const std::uint32_t chunks = std::uint32_t{1} << prefix_bits;

  std::vector<std::vector<std::int64_t>> partial(chunks);
  if (jobs <= 1 || chunks == 1) {
    for (std::uint32_t c = 0; c < chunks; ++c) partial[c] = walk_chunk(g, low_bits, c);
  } else {
    std::vector<std::jthread> workers;
    for (std::uint32_t c = 0; c < chunks; ++c)
      workers.emplace_back([&, c] { partial[c] = walk_chunk(g, low_bits, c); });
  }
  for (const auto& part : partial)
    for (std::size_t k = 0; k < part.size(); ++k) out.m[k] = checked_add(out.m[k], part[k]);
  return out;
}

std::vector<std::int64_t> connected_spanning_counts(const Graph& g) {
  const int n = g.node_count();
  const int e = g.edge_count();
  if (n > 16) throw SpectrumError("connected_spanning_counts: at most 16 nodes");
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<int> inner(subsets, 0);
  for (std::size_t s = 0; s < subsets; ++s) inner[s] = g.induced_edge_count(NodeSet(static_cast<std::uint32_t>(s)));

  // conn[S][j]: j-edge subsets of E[S] connecting all of S.
  std::vector<std::vector<std::int64_t>> conn(subsets);
  for (std::size_t s = 1; s < subsets; ++s) {
    const int es = inner[s];
    auto& row = conn[s];
    row.assign(static_cast<std::size_t>(es + 1), 0);
    for (int j = 0; j <= es; ++j) row[static_cast<std::size_t>(j)] = binomial(es, j);
    const std::size_t low = s & (~s + 1);
    // Subtract subsets whose component containing the lowest node is a
    // proper subset T of S.
    const std::size_t rest = s ^ low;
    for (std::size_t t_extra = rest;; t_extra = (t_extra - 1) & rest) {
      const std::size_t t = t_extra | low;
      if (t != s) {
        const auto& ct = conn[t];
        const int er = inner[s ^ t];
        for (std::size_t i = 0; i < ct.size(); ++i) {
          if (ct[i] == 0) continue;
          for (int r = 0; r <= er; ++r) {
            const std::size_t j = i + static_cast<std::size_t>(r);
            row[j] = checked_sub(row[j], checked_mul(ct[i], binomial(er, r)));
          }
        }
      }
      if (t_extra == 0) break;
    }
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(e + 1), 0);
  if (n == 0) return counts;
  const auto& full = conn[subsets - 1];
  for (std::size_t j = 0; j < full.size(); ++j) counts[j] = full[j];
  return counts;
}

CutsetSpectrum spectrum_by_complement(const Graph& g) {
  require_spectrum_input(g);
  const int e = g.edge_count();
  const auto connected = connected_spanning_counts(g);
  CutsetSpectrum out{g.node_count(), e, std::vector<std::int64_t>(static_cast<std::size_t>(e + 1), 0)};
  for (int k = 0; k <= e; ++k)
    out.m[static_cast<std::size_t>(k)] = checked_sub(binomial(e, k), connected[static_cast<std::size_t>(e - k)]);
  return out;
}

std::int64_t spectrum_via_components(const Graph& g, int k) {
  const int n = g.node_count();
  if (n > 8) throw SpectrumError("spectrum_via_components: at most 8 nodes");
  require_spectrum_input(g);
  const int e = g.edge_count();
  if (k < 0 || k > e) return 0;

  std::unordered_set<std::uint32_t> cutsets;
  std::vector<int> free_edges;
  for (int order = 1; 2 * order <= n; ++order) {
    for (NodeSet a : connected_subgraphs(g, order, k)) {
      std::uint32_t forced = 0;
      std::uint32_t internal = 0;
      free_edges.clear();
      for (int pos = 0; pos < e; ++pos) {
        auto [u, v] = g.edge(pos);
        const bool in_u = a.contains(u);
        const bool in_v = a.contains(v);
        if (in_u != in_v) forced |= std::uint32_t{1} << pos;
        else if (in_u) internal |= std::uint32_t{1} << pos;
        else free_edges.push_back(pos);
      }
      const int forced_count = std::popcount(forced);
      // Removed internal edges R must leave [A] connected.
      for (std::uint32_t r = internal;; r = (r - 1) & internal) {
        const int need = k - forced_count - std::popcount(r);
        if (need >= 0 && need <= static_cast<int>(free_edges.size())) {
          std::vector<std::uint32_t> kept(static_cast<std::size_t>(n), 0);
          for (int pos = 0; pos < e; ++pos) {
            if (!((internal >> pos) & 1U) || ((r >> pos) & 1U)) continue;
            auto [u, v] = g.edge(pos);
            kept[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
            kept[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
          }
          if (is_connected_within(kept, a)) {
            // Choose `need` of the free edges (lexicographic combinations).
            std::vector<int> pick(static_cast<std::size_t>(need));
            for (int i = 0; i < need; ++i) pick[static_cast<std::size_t>(i)] = i;
            const int pool = static_cast<int>(free_edges.size());
            while (true) {
              std::uint32_t s = forced | r;
              for (int i : pick) s |= std::uint32_t{1} << free_edges[static_cast<std::size_t>(i)];
              cutsets.insert(s);
              int i = need - 1;
              while (i >= 0 && pick[static_cast<std::size_t>(i)] == pool - need + i) --i;
              if (i < 0) break;
              ++pick[static_cast<std::size_t>(i)];
              for (int j = i + 1; j < need; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            }
          }
        }
        if (r == 0) break;
      }
    }
  }
  return static_cast<std::int64_t>(cutsets.size());
}

std::int64_t tree_number(const Graph& g) {
  const int n = g.node_count();
  if (n <= 1) return 1;
  const int size = n - 1;
  std::vector<__int128> a(static_cast<std::size_t>(size * size), 0);
  const auto at = [&](int r, int c) -> __int128& { return a[static_cast<std::size_t>(r * size + c)]; };
  for (int v = 0; v < size; ++v) {
    at(v, v) = g.degree(v);
    for (int w = 0; w < size; ++w)
      if (g.adjacent(v, w)) at(v, w) = -1;
  }
  // Bareiss: every intermediate entry is a minor of the Laplacian.
  constexpr __int128 kLimit = static_cast<__int128>(1) << 62;
  __int128 previous = 1;
  int sign = 1;
  for (int p = 0; p < size; ++p) {
    if (at(p, p) == 0) {
      int swap_row = -1;
      for (int r = p + 1; r < size; ++r)
        if (at(r, p) != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      for (int c = 0; c < size; ++c) std::swap(at(p, c), at(swap_row, c));
      sign = -sign;
    }
    for (int r = p + 1; r < size; ++r) {
      for (int c = p + 1; c < size; ++c) {
        const __int128 lhs = at(r, c);
        const __int128 rhs = at(p, c);
        if (lhs > kLimit || lhs < -kLimit || rhs > kLimit || rhs < -kLimit || at(p, p) > kLimit ||
            at(p, p) < -kLimit || at(r, p) > kLimit || at(r, p) < -kLimit)
          throw OverflowError("tree_number: intermediate value too large");
        at(r, c) = (at(p, p) * lhs - at(r, p) * rhs) / previous;
      }
      at(r, p) = 0;
    }
    previous = at(p, p);
  }
  const __int128 det = sign * at(size - 1, size - 1);
  if (det < 0 || det > INT64_MAX) throw OverflowError("tree_number exceeds 64 bits");
  return static_cast<std::int64_t>(det);
}

int edge_connectivity(const Graph& g) {
  const int n = g.node_count();
  if (!is_connected(g)) throw SpectrumError("edge_connectivity: graph is disconnected");
  if (n <= 1) return 0;
  int best = g.edge_count();
  std::vector<int> capacity(static_cast<std::size_t>(n * n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int t = 1; t < n; ++t) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) capacity[static_cast<std::size_t>(u * n + v)] = g.adjacent(u, v) ? 1 : 0;
    int flow = 0;
    while (flow < best) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[0] = 0;
      std::vector<int> queue{0};
      for (std::size_t head = 0; head < queue.size() && parent[static_cast<std::size_t>(t)] < 0; ++head) {
        const int u = queue[head];
        for (int v = 0; v < n; ++v) {
          if (parent[static_cast<std::size_t>(v)] < 0 && capacity[static_cast<std::size_t>(u * n + v)] > 0) {
            parent[static_cast<std::size_t>(v)] = u;
            queue.push_back(v);
          }
        }
      }
      if (parent[static_cast<std::size_t>(t)] < 0) break;
      for (int v = t; v != 0; v = parent[static_cast<std::size_t>(v)]) {
        const int u = parent[static_cast<std::size_t>(v)];
        --capacity[static_cast<std::size_t>(u * n + v)];
        ++capacity[static_cast<std::size_t>(v * n + u)];
      }
      ++flow;
    }
    best = std::min(best, flow);
  }
  return best;
}

bool is_superconnected(const Graph& g, const CutsetSpectrum& s) {
  const auto lambda = s.first_nonzero();
  if (!lambda) return false;
  for (int v = 0; v < g.node_count(); ++v)
    if (g.degree(v) != *lambda) return false;
  return s[*lambda] == g.node_count();
}

bool is_superconnected(const Graph& g) { return is_superconnected(g, cutset_spectrum(g)); }

double unreliability(const CutsetSpectrum& s, double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("unreliability: rho must lie in [0, 1]");
  // Neumaier summation; all terms are nonnegative so there is no
  // cancellation, only rounding accumulation.
  double sum = 0.0;
  double carry = 0.0;
  for (int k = 0; k <= s.edges; ++k) {
    const auto mk = s[k];
    if (mk == 0) continue;
    const double term = static_cast<double>(mk) * std::pow(rho, k) * std::pow(1.0 - rho, s.edges - k);
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + carry;
}

Comparison compare(const CutsetSpectrum& a, const CutsetSpectrum& b) {
  if (a.edges != b.edges) throw SpectrumError("compare: spectra have different edge counts");
  Comparison out;
  out.dominates = true;
  for (int k = 0; k <= a.edges; ++k) {
    if (a[k] > b[k]) out.dominates = false;
    if (a[k] != b[k]) {
      if (!out.first_divergence) out.first_divergence = k;
      out.last_divergence = k;
    }
  }
  const auto winner_at = [&](std::optional<int> k) {
    if (!k) return Winner::kTie;
    return a[*k] < b[*k] ? Winner::kFirst : Winner::kSecond;
  };
  out.near_zero_winner = winner_at(out.first_divergence);
  out.near_one_winner = winner_at(out.last_divergence);
  return out;
}

MonteCarloEstimate monte_carlo_unreliability(const Graph& g, double rho, std::int64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_unreliability: trials must be >= 1");
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("monte_carlo_unreliability: rho must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution fails(rho);
  const int n = g.node_count();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  MonteCarloEstimate out;
  out.trials = trials;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::fill(adj.begin(), adj.end(), 0);
    for (auto [u, v] : g.edges()) {
      if (fails(rng)) continue;
      adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
      adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
    }
    if (!is_connected_within(adj, g.all_nodes())) ++out.failures;
  }
  out.estimate = static_cast<double>(out.failures) / static_cast<double>(trials);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
  return out;
}

std::string spectrum_csv(const CutsetSpectrum& s) {
  std::ostringstream os;
  os << "k,m_k,C_e_k\n";
  for (int k = 0; k <= s.edges; ++k) os << k << ',' << s[k] << ',' << binomial(s.edges, k) << '\n';
  return os.str();
}

std::string spectrum_json(const CutsetSpectrum& s, const std::string& graph6) {
  nlohmann::ordered_json j;
  if (!graph6.empty()) j["graph6"] = graph6;
  j["nodes"] = s.nodes;
  j["edges"] = s.edges;
  j["m"] = s.m;
  std::vector<std::int64_t> binomials;
  for (int k = 0; k <= s.edges; ++k) binomials.push_back(binomial(s.edges, k));
  j["binomial"] = binomials;
  return j.dump(2);
}

std::string evaluation_table_csv(const CutsetSpectrum& s, std::span<const double> rhos) {
  std::ostringstream os;
  os << "rho,unreliability\n" << std::setprecision(17);
  for (double rho : rhos) os << rho << ',' << unreliability(s, rho) << '\n';
  return os.str();
}

}  // namespace umrg
