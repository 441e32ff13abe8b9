#ifndef UMRG_REPORT_HPP
#define UMRG_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace umrg {

/// A graph that falsifies the claim being checked.
struct Witness {
  std::string graph6;
  int k = -1;  // -1 when the failure is not tied to one coefficient
  std::string expected;
  std::string actual;
  std::string reason;
};

/// A printed constant that disagrees with its recomputation.
struct Discrepancy {
  std::string claim_id;
  std::string location;
  std::string printed_value;
  std::string recomputed_value;
  std::string note;
};

/// One audited constant.
struct AuditRow {
  std::string id;
  std::string location;
  std::int64_t printed = 0;
  std::int64_t recomputed = 0;            // displayed expression, exact binomials
  std::optional<std::int64_t> rederived;  // same case through the bound machinery
  std::optional<std::int64_t> table_based;
  std::int64_t graphs_covered = 0;
  std::string status;  // match | match-after-rederivation | mismatch
};

/// A named sub-check with its outcome; informational unless it also
/// produced witnesses.
struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct VerificationReport {
  std::string claim_id;
  std::string description;
  std::int64_t graphs_checked = 0;
  bool pass = true;
  std::vector<Witness> witnesses;
  std::vector<Discrepancy> discrepancies;
  std::vector<AuditRow> audit;
  std::vector<Check> checks;
  std::vector<VerificationReport> parts;
  double runtime_ms = 0;

  void add_witness(Witness w);
  void add_check(std::string name, bool pass, std::string detail = {});
  /// pass = no witnesses here or in any part.
  void finalize();
  const AuditRow* find_audit(const std::string& id) const;
};

/// JSON report; runtime_ms is omitted when `with_runtime` is false so that
/// repeated runs compare byte-for-byte.
std::string report_json(const VerificationReport& r, bool with_runtime = true);

/// Human-readable summary, one line per check.
std::string report_text(const VerificationReport& r);

}  // namespace umrg

#endif
