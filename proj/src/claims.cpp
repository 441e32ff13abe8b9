#include "umrg/claims.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "umrg/arith.hpp"

namespace umrg {

namespace {

using nlohmann::json;

std::vector<int> int_list(const json& j) { return j.get<std::vector<int>>(); }

TermList term_list(const json& j) {
  TermList t;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ClaimsError("term must be [coefficient, argument]");
    t.terms.emplace_back(term[0].get<std::int64_t>(), term[1].get<int>());
  }
  return t;
}

BoundMode mode_from(const std::string& s) {
  if (s == "exact-graph") return BoundMode::kExactGraph;
  if (s == "degrees-only") return BoundMode::kDegreesOnly;
  if (s == "refined") return BoundMode::kRefined;
  throw ClaimsError("unknown bound mode '" + s + "'");
}

IntRange range_from(const json& j) {
  const auto v = j.get<std::vector<int>>();
  if (v.size() != 2 || v[0] > v[1]) throw ClaimsError("range must be [lo, hi] with lo <= hi");
  return {v[0], v[1]};
}

}  // namespace

const CaseBound& Claims::case_bound(const std::string& id) const {
  for (const auto& c : case_bounds)
    if (c.id == id) return c;
  throw ClaimsError("no case bound '" + id + "' in manifest");
}

const EdgeSumClaim& Claims::edge_sum(const std::string& id) const {
  for (const auto& c : edge_sums)
    if (c.id == id) return c;
  throw ClaimsError("no edge sum '" + id + "' in manifest");
}

std::string default_claims_path() {
  if (const char* env = std::getenv("UMRG_CLAIMS"); env && *env) return env;
#ifdef UMRG_DEFAULT_CLAIMS
  return UMRG_DEFAULT_CLAIMS;
#else
  return "data/claims.json";
#endif
}

Claims load_claims(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ClaimsError("cannot open claims manifest " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_claims(buf.str(), path);
}

Claims parse_claims(const std::string& json_text, const std::string& source) {
  Claims c;
  c.source = source;
  try {
    const json j = json::parse(json_text);
    if (j.at("manifest_version").get<int>() != 1) throw ClaimsError("unsupported manifest version");

    const auto& u = j.at("universe");
    c.nodes = u.at("nodes");
    c.edges = u.at("edges");
    c.connected_classes = u.at("connected_classes");
    c.regular_classes = u.at("regular_classes");

    const auto& k44 = j.at("k44");
    c.k44_builder = k44.at("builder");
    c.k44_spectrum = k44.at("spectrum").get<std::vector<std::int64_t>>();
    c.k44_tree_number = k44.at("tree_number");
    c.full_binomial_from = k44.at("full_binomial_from");

    const auto& t1 = j.at("extension_table");
    c.table_edges = t1.at("edges");
    for (const auto& [k, row] : t1.at("rows").items()) c.extension_table[std::stoi(k)] = row.get<std::vector<std::int64_t>>();
    for (const auto& [k, v] : t1.at("k44_column").items()) c.k44_column[std::stoi(k)] = v.get<std::int64_t>();

    const auto& t2 = j.at("edge_term_table");
    c.edge_table_k = t2.at("k");
    for (const auto& entry : t2.at("entries")) {
      const auto v = entry.get<std::vector<std::int64_t>>();
      if (v.size() != 3) throw ClaimsError("edge table entry must be [deg_u, deg_v, value]");
      c.edge_table[{static_cast<int>(std::min(v[0], v[1])), static_cast<int>(std::max(v[0], v[1]))}] = v[2];
    }

    const auto& reg = j.at("regular");
    c.k44_triangle_flag = reg.at("k44_triangle_flag");
    c.k44_squares = reg.at("k44_squares");
    const auto bounds = reg.at("k44_bounds").get<std::vector<std::int64_t>>();
    if (bounds.size() != 4) throw ClaimsError("k44_bounds needs four values");
    std::copy(bounds.begin(), bounds.end(), c.k44_regular_bounds.begin());
    c.m8_base = reg.at("m8_base");
    c.printed_gap = reg.at("printed_gap");
    c.printed_gap_uses_full_square_count = reg.at("printed_gap_uses_full_square_count");

    for (const auto& e : j.at("case_bounds")) {
      CaseBound cb;
      cb.id = e.at("id");
      cb.location = e.at("location");
      cb.k = e.at("k");
      cb.printed = e.at("printed");
      cb.reduce_min = e.value("reduce", std::string()) == "min";
      cb.below_target = e.value("below_alpha", false);
      for (const auto& v : e.at("variants")) cb.variants.push_back(term_list(v));
      if (cb.variants.empty()) throw ClaimsError(cb.id + ": no variants");
      if (cb.variants.size() > 1 && !cb.reduce_min) throw ClaimsError(cb.id + ": several variants need a reduction");
      cb.prefix = int_list(e.at("prefix"));
      if (e.contains("requires_degree3_adjacent")) cb.requires_degree3_adjacent = e.at("requires_degree3_adjacent").get<bool>();
      if (e.contains("rederive")) {
        cb.rederive_mode = mode_from(e.at("rederive").at("mode"));
        cb.rederive_degrees = int_list(e.at("rederive").at("degrees"));
      }
      cb.note = e.value("note", std::string());
      c.case_bounds.push_back(std::move(cb));
    }

    for (const auto& e : j.at("edge_sums")) {
      EdgeSumClaim s;
      s.id = e.at("id");
      s.location = e.at("location");
      s.sequence = int_list(e.at("sequence"));
      s.constraints.ab_sum = range_from(e.at("ab_sum"));
      s.constraints.d_range = range_from(e.at("d_range"));
      s.constraints.total = e.at("total");
      const auto& p = e.at("printed");
      s.printed = {p.at("a"), p.at("b"), p.at("c"), p.at("d"), p.at("sum")};
      c.edge_sums.push_back(std::move(s));
    }

    for (const auto& e : j.at("final_chains")) {
      FinalChain f;
      f.id = e.at("id");
      f.location = e.at("location");
      f.node_union = e.at("node_union");
      f.edge_sum = e.at("edge_sum");
      const auto parts = e.at("printed_parts").get<std::vector<std::int64_t>>();
      if (parts.size() != 2) throw ClaimsError(f.id + ": printed_parts needs two values");
      f.printed_parts = {parts[0], parts[1]};
      f.overlap = e.at("overlap");
      f.printed = e.at("printed");
      c.final_chains.push_back(std::move(f));
    }
  } catch (const json::exception& ex) {
    throw ClaimsError("malformed claims manifest " + source + ": " + ex.what());
  }
  for (const auto& f : c.final_chains) {
    c.case_bound(f.node_union);
    c.edge_sum(f.edge_sum);
  }
  return c;
}

std::int64_t evaluate_terms(const TermList& t, int k, int e) {
  std::int64_t s = 0;
  for (const auto& [coef, arg] : t.terms) s = checked_add(s, checked_mul(coef, extension_count(k, arg, e)));
  return s;
}

std::int64_t evaluate_terms_with_table(const TermList& t, int k, int e,
                                       const std::map<int, std::vector<std::int64_t>>& table) {
  const auto row = table.find(k);
  std::int64_t s = 0;
  for (const auto& [coef, arg] : t.terms) {
    std::int64_t v = extension_count(k, arg, e);
    if (row != table.end() && arg >= 1 && arg <= static_cast<int>(row->second.size())) v = row->second[arg - 1];
    s = checked_add(s, checked_mul(coef, v));
  }
  return s;
}

}  // namespace umrg
