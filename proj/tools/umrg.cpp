// umrg: cutset spectra, reliability bounds, small-graph enumeration and
// the claim verifier for uniformly most-reliable graphs.
//
// Exit codes: 0 success or all claims hold, 1 a claim is falsified,
// 2 usage, input or budget error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "umrg/bounds.hpp"
#include "umrg/builders.hpp"
#include "umrg/census.hpp"
#include "umrg/claims.hpp"
#include "umrg/enumeration.hpp"
#include "umrg/graph6.hpp"
#include "umrg/spectrum.hpp"
#include "umrg/verify.hpp"

namespace {

using namespace umrg;
using nlohmann::ordered_json;

constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct GraphInput {
  std::string inline_g6;
  std::string file;
  std::string builder;

  void attach(CLI::App* cmd) {
    cmd->add_option("graph", inline_g6, "graph6 string");
    cmd->add_option("-f,--file", file, "newline-delimited graph6 file ('-' for stdin)");
    cmd->add_option("-b,--builder", builder, "named family, e.g. complete_bipartite:4,4");
  }

  std::vector<Graph> load() const {
    const int given = !inline_g6.empty() + !file.empty() + !builder.empty();
    if (given != 1) throw CLI::ValidationError("input", "give exactly one of a graph6 string, --file or --builder");
    if (!builder.empty()) return {build_named(builder)};
    if (!inline_g6.empty()) return {from_graph6(inline_g6)};
    if (file == "-") return read_graph6_stream(std::cin);
    std::ifstream in(file);
    if (!in) throw GraphError("cannot open " + file);
    return read_graph6_stream(in);
  }
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw CLI::ValidationError("list", "not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

ordered_json comparison_json(const Comparison& c) {
  auto winner = [](Winner w) { return w == Winner::kFirst ? "a" : w == Winner::kSecond ? "b" : "tie"; };
  ordered_json j;
  j["dominates"] = c.dominates;
  j["first_divergence"] = c.first_divergence ? ordered_json(*c.first_divergence) : ordered_json(nullptr);
  j["last_divergence"] = c.last_divergence ? ordered_json(*c.last_divergence) : ordered_json(nullptr);
  j["near_zero_winner"] = winner(c.near_zero_winner);
  j["near_one_winner"] = winner(c.near_one_winner);
  return j;
}

ordered_json census_json(const Graph& g) {
  const auto s = structural_census(g);
  const auto c = connectivity_census(g);
  ordered_json j;
  j["graph6"] = to_graph6(g);
  j["nodes"] = g.node_count();
  j["edges"] = g.edge_count();
  j["degree_sequence"] = s.degree_sequence;
  j["min_degree"] = s.min_degree;
  j["max_degree"] = s.max_degree;
  j["regular"] = s.is_regular;
  j["girth"] = s.girth ? ordered_json(*s.girth) : ordered_json("acyclic");
  j["triangles"] = s.triangle_count;
  j["squares"] = s.square_count;
  j["triangle_flag"] = s.triangle_flag;
  j["connected"] = c.connected;
  j["biconnected"] = c.biconnected;
  auto& bridges = j["bridges"] = ordered_json::array();
  for (int p : c.bridges.members()) bridges.push_back({g.edge(p).u, g.edge(p).v});
  j["cut_points"] = c.cut_points.members();
  if (c.connected) {
    j["edge_connectivity"] = edge_connectivity(g);
    j["tree_number"] = tree_number(g);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cutset spectra, reliability bounds and exhaustive checks for small graphs"};
  app.require_subcommand(1);
  int jobs = default_jobs();
  app.add_option("-j,--jobs", jobs, "worker threads (default: UMRG_JOBS or hardware concurrency)")->check(CLI::PositiveNumber);

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "cutset counts m_0..m_e");
  GraphInput spectrum_in;
  spectrum_in.attach(spectrum_cmd);
  std::string spectrum_out = "csv";
  std::vector<double> rhos;
  spectrum_cmd->add_option("-o,--out", spectrum_out, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  spectrum_cmd->add_option("--rho", rhos, "also tabulate U(rho) at these points")->check(CLI::Range(0.0, 1.0));

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "inclusion-exclusion lower bound on m_k");
  GraphInput bounds_in;
  bounds_in.attach(bounds_cmd);
  int bounds_k = 8;
  std::string bounds_nodes, bounds_degrees, bounds_mode = "exact";
  int bounds_edges = 16;
  int bounds_depth = 0;
  int regular_t = -1;
  std::int64_t regular_c = -1;
  bounds_cmd->add_option("-k", bounds_k, "cut size")->check(CLI::NonNegativeNumber);
  bounds_cmd->add_option("--nodes", bounds_nodes, "comma-separated node set A (default: all nodes)");
  bounds_cmd->add_option("--degrees", bounds_degrees, "degrees of A, without a graph");
  bounds_cmd->add_option("--edges", bounds_edges, "edge count when only degrees are given");
  bounds_cmd->add_option("--mode", bounds_mode, "exact, degrees or refined")->check(CLI::IsMember({"exact", "degrees", "refined"}));
  bounds_cmd->add_option("--depth", bounds_depth, "truncate the expansion at this level")->check(CLI::NonNegativeNumber);
  bounds_cmd->add_option("--triangle-flag", regular_t, "closed-form regular bounds: triangle flag")->check(CLI::Range(0, 1));
  bounds_cmd->add_option("--squares", regular_c, "closed-form regular bounds: number of 4-cycles");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "isomorphism classes of a graph class");
  ClassFilter filter;
  std::string sequence, backend = "degree", enum_out = "g6";
  int min_degree = -1;
  enum_cmd->add_option("-n,--nodes", filter.n, "node count")->required();
  enum_cmd->add_option("-e,--edges", filter.e, "edge count")->required();
  enum_cmd->add_flag("--connected", filter.connected, "connected graphs only");
  enum_cmd->add_flag("--biconnected", filter.biconnected, "biconnected graphs only");
  enum_cmd->add_flag("--regular", filter.regular, "regular graphs only");
  enum_cmd->add_option("--min-degree", min_degree, "exact minimum degree");
  enum_cmd->add_option("--sequence", sequence, "comma-separated degree sequence");
  enum_cmd->add_option("--backend", backend, "degree or edge")->check(CLI::IsMember({"degree", "edge"}));
  enum_cmd->add_option("--budget", filter.budget, "search budget")->check(CLI::PositiveNumber);
  enum_cmd->add_option("-o,--out", enum_out, "g6 (graph list) or json (stratification)")->check(CLI::IsMember({"g6", "json"}));

  // census
  auto* census_cmd = app.add_subcommand("census", "structural and connectivity invariants");
  GraphInput census_in;
  census_in.attach(census_cmd);

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "coefficient dominance of graph a over graph b");
  std::string cmp_a, cmp_b;
  compare_cmd->add_option("-a,--a", cmp_a, "graph6 string or builder spec")->required();
  compare_cmd->add_option("-b,--b", cmp_b, "graph6 string or builder spec")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check the manifest's claims exhaustively");
  std::string claim = "all", verify_out = "text", claims_path = default_claims_path();
  std::int64_t verify_budget = 200'000'000;
  bool no_timing = false;
  verify_cmd->add_option("claim", claim, "k44, regular, lemma2, lemma3, biconnected, tables or all")
      ->check(CLI::IsMember({"k44", "regular", "lemma2", "lemma3", "biconnected", "tables", "all"}));
  verify_cmd->add_option("-o,--out", verify_out, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--claims", claims_path, "claims manifest");
  verify_cmd->add_option("--budget", verify_budget, "enumeration budget")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--no-timing", no_timing, "omit runtime_ms so reports compare byte-for-byte");

  // mc
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of the unreliability");
  GraphInput mc_in;
  mc_in.attach(mc_cmd);
  double mc_rho = 0.5;
  std::int64_t trials = 100'000;
  std::uint64_t seed = 1;
  mc_cmd->add_option("--rho", mc_rho, "edge failure probability")->check(CLI::Range(0.0, 1.0));
  mc_cmd->add_option("--trials", trials, "samples")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum_cmd) {
      const auto graphs = spectrum_in.load();
      ordered_json all = ordered_json::array();
      for (const auto& g : graphs) {
        const auto s = cutset_spectrum(g, jobs);
        if (spectrum_out == "json") {
          auto j = ordered_json::parse(spectrum_json(s, to_graph6(g)));
          if (!rhos.empty()) {
            auto& u = j["unreliability"] = ordered_json::array();
            for (double r : rhos) u.push_back({{"rho", r}, {"value", unreliability(s, r)}});
          }
          all.push_back(std::move(j));
        } else {
          if (graphs.size() > 1) std::cout << "# " << to_graph6(g) << "\n";
          std::cout << (rhos.empty() ? spectrum_csv(s) : evaluation_table_csv(s, rhos));
        }
      }
      if (spectrum_out == "json") std::cout << (graphs.size() == 1 ? all[0] : all).dump(2) << "\n";
      return 0;
    }

    if (*bounds_cmd) {
      if (regular_t >= 0 || regular_c >= 0) {
        if (regular_t < 0 || regular_c < 0) throw CLI::ValidationError("bounds", "--triangle-flag and --squares go together");
        const auto rb = regular_lower_bounds(regular_t, regular_c);
        ordered_json j{{"triangle_flag", regular_t}, {"squares", regular_c}, {"m5_m8", rb.m}, {"odd_square_count", rb.odd_square_count}};
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      BoundContext ctx;
      BoundMode mode = bounds_mode == "exact" ? BoundMode::kExactGraph
                       : bounds_mode == "degrees" ? BoundMode::kDegreesOnly
                                                  : BoundMode::kRefined;
      if (!bounds_degrees.empty()) {
        if (mode == BoundMode::kExactGraph) throw CLI::ValidationError("bounds", "degrees alone need --mode degrees or refined");
        ctx = BoundContext::from_degrees(parse_list(bounds_degrees), bounds_edges, bounds_k);
      } else {
        const auto graphs = bounds_in.load();
        if (graphs.size() != 1) throw CLI::ValidationError("bounds", "expects exactly one graph");
        const Graph& g = graphs.front();
        NodeSet a = g.all_nodes();
        if (!bounds_nodes.empty()) {
          a = NodeSet();
          for (int v : parse_list(bounds_nodes)) {
            if (v < 0 || v >= g.node_count()) throw GraphError("node " + std::to_string(v) + " out of range");
            a.insert(v);
          }
        }
        ctx = BoundContext::from_graph(g, a, bounds_k);
      }
      const auto report = union_lower_bound(ctx, mode, bounds_depth > 0 ? std::optional<int>(bounds_depth) : std::nullopt);
      std::cout << bound_report_json(report) << "\n";
      return 0;
    }

    if (*enum_cmd) {
      if (min_degree >= 0) filter.min_degree = min_degree;
      if (!sequence.empty()) {
        auto d = parse_list(sequence);
        std::sort(d.begin(), d.end());
        filter.degree_sequence = DegreeSequence{d};
      }
      if (enum_out == "json") {
        std::cout << stratification_json(stratify(filter, jobs), filter) << "\n";
        return 0;
      }
      const auto graphs = enumerate_class(filter, backend == "edge" ? Backend::kEdgeAugmentation : Backend::kDegreeSequence, jobs);
      write_graph6_stream(std::cout, graphs);
      return 0;
    }

    if (*census_cmd) {
      const auto graphs = census_in.load();
      ordered_json all = ordered_json::array();
      for (const auto& g : graphs) all.push_back(census_json(g));
      std::cout << (graphs.size() == 1 ? all[0] : all).dump(2) << "\n";
      return 0;
    }

    if (*compare_cmd) {
      auto load = [](const std::string& s) { return s.find(':') != std::string::npos || s == "petersen" ? build_named(s) : from_graph6(s); };
      const Graph a = load(cmp_a), b = load(cmp_b);
      const auto sa = cutset_spectrum(a, jobs), sb = cutset_spectrum(b, jobs);
      auto j = comparison_json(compare(sa, sb));
      j["a"] = to_graph6(a);
      j["b"] = to_graph6(b);
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*verify_cmd) {
      const Claims claims = load_claims(claims_path);
      VerifyOptions options;
      options.jobs = jobs;
      options.budget = verify_budget;
      VerificationReport report;
      if (claim == "all") {
        report = verify_all(claims, options);
      } else {
        options.cross_check_backends = claim == "k44";
        const Universe u = build_universe(claims, options);
        if (claim == "k44") report = verify_k44(u, claims, options);
        if (claim == "regular") report = verify_regular(u, claims);
        if (claim == "lemma2") report = verify_lemma(u, claims, 2);
        if (claim == "lemma3") report = verify_lemma(u, claims, 3);
        if (claim == "biconnected") report = verify_biconnected_reduction(u, claims);
        if (claim == "tables") report = verify_tables(u, claims);
      }
      std::cout << (verify_out == "json" ? report_json(report, !no_timing) : report_text(report));
      return report.pass ? 0 : kExitFalsified;
    }

    if (*mc_cmd) {
      const auto graphs = mc_in.load();
      if (graphs.size() != 1) throw CLI::ValidationError("mc", "expects exactly one graph");
      const auto est = monte_carlo_unreliability(graphs.front(), mc_rho, trials, seed);
      ordered_json j{{"graph6", to_graph6(graphs.front())}, {"rho", mc_rho},          {"trials", est.trials},
                     {"failures", est.failures},             {"estimate", est.estimate}, {"std_error", est.std_error}};
      if (graphs.front().edge_count() <= kMaxSpectrumEdges)
        j["exact"] = unreliability(cutset_spectrum(graphs.front(), jobs), mc_rho);
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
