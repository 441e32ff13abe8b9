#include "umrg/report.hpp"

#include <sstream>

#include "json.hpp"

namespace umrg {

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const VerificationReport& r, bool with_runtime) {
  ordered_json j;
  j["claim_id"] = r.claim_id;
  j["description"] = r.description;
  j["pass"] = r.pass;
  j["graphs_checked"] = r.graphs_checked;

  auto& w = j["witnesses"] = ordered_json::array();
  for (const auto& x : r.witnesses) {
    ordered_json e{{"graph6", x.graph6}};
    if (x.k >= 0) e["k"] = x.k;
    e["expected"] = x.expected;
    e["actual"] = x.actual;
    e["reason"] = x.reason;
    w.push_back(std::move(e));
  }

  auto& d = j["discrepancies"] = ordered_json::array();
  for (const auto& x : r.discrepancies)
    d.push_back({{"claim_id", x.claim_id},
                 {"location", x.location},
                 {"printed_value", x.printed_value},
                 {"recomputed_value", x.recomputed_value},
                 {"note", x.note}});

  if (!r.audit.empty()) {
    auto& a = j["audit"] = ordered_json::array();
    for (const auto& x : r.audit) {
      ordered_json e{{"id", x.id}, {"location", x.location}, {"printed", x.printed}, {"recomputed", x.recomputed}};
      if (x.rederived) e["rederived"] = *x.rederived;
      if (x.table_based) e["table_based"] = *x.table_based;
      e["graphs_covered"] = x.graphs_covered;
      e["status"] = x.status;
      a.push_back(std::move(e));
    }
  }

  auto& c = j["checks"] = ordered_json::array();
  for (const auto& x : r.checks) c.push_back({{"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});

  if (!r.parts.empty()) {
    auto& p = j["parts"] = ordered_json::array();
    for (const auto& x : r.parts) p.push_back(to_json(x, with_runtime));
  }
  if (with_runtime) j["runtime_ms"] = r.runtime_ms;
  return j;
}

void text(const VerificationReport& r, std::ostringstream& out, const std::string& indent) {
  out << indent << (r.pass ? "PASS " : "FAIL ") << r.claim_id << " (" << r.graphs_checked << " graphs): " << r.description
      << "\n";
  for (const auto& c : r.checks) out << indent << "  [" << (c.pass ? "ok" : "!!") << "] " << c.name << ": " << c.detail << "\n";
  for (const auto& a : r.audit)
    out << indent << "  audit " << a.id << ": printed " << a.printed << ", recomputed " << a.recomputed
        << (a.rederived ? ", rederived " + std::to_string(*a.rederived) : std::string()) << " -> " << a.status << "\n";
  for (const auto& d : r.discrepancies)
    out << indent << "  discrepancy " << d.claim_id << ": printed " << d.printed_value << ", recomputed " << d.recomputed_value
        << " (" << d.note << ")\n";
  for (const auto& w : r.witnesses)
    out << indent << "  witness " << w.graph6 << (w.k >= 0 ? " k=" + std::to_string(w.k) : std::string()) << ": expected "
        << w.expected << ", got " << w.actual << " (" << w.reason << ")\n";
  for (const auto& p : r.parts) text(p, out, indent + "  ");
}

}  // namespace

void VerificationReport::add_witness(Witness w) { witnesses.push_back(std::move(w)); }

void VerificationReport::add_check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void VerificationReport::finalize() {
  pass = witnesses.empty();
  for (auto& p : parts) {
    p.finalize();
    pass = pass && p.pass;
  }
}

const AuditRow* VerificationReport::find_audit(const std::string& id) const {
  for (const auto& a : audit)
    if (a.id == id) return &a;
  for (const auto& p : parts)
    if (const auto* a = p.find_audit(id)) return a;
  return nullptr;
}

std::string report_json(const VerificationReport& r, bool with_runtime) { return to_json(r, with_runtime).dump(2) + "\n"; }

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  text(r, out, "");
  return out.str();
}

}  // namespace umrg
