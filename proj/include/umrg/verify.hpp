#ifndef UMRG_VERIFY_HPP
#define UMRG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "umrg/claims.hpp"
#include "umrg/enumeration.hpp"
#include "umrg/report.hpp"
#include "umrg/spectrum.hpp"

namespace umrg {

struct VerifyOptions {
  int jobs = 1;
  std::int64_t budget = 200'000'000;
  /// Re-enumerate with the edge-augmentation backend and compare.
  bool cross_check_backends = true;
};

/// All connected graphs of the manifest's (n, e) class with their spectra.
struct Universe {
  ClassFilter filter;
  std::vector<Graph> graphs;  // canonical, sorted by canonical form
  std::vector<std::string> forms;
  std::vector<CutsetSpectrum> spectra;
  std::vector<bool> biconnected;
  std::vector<DegreeSequence> sequences;
  int reference = -1;  // index of the reference graph (K_{4,4})
  bool backends_checked = false;
  bool backends_agree = false;
  double build_ms = 0;

  std::size_t size() const { return graphs.size(); }
};

Universe build_universe(const Claims& claims, const VerifyOptions& options);

/// Reference spectrum, dominance over the whole class, full binomials in
/// the tail, and uniqueness of the optimum.
VerificationReport verify_k44(const Universe& u, const Claims& claims, const VerifyOptions& options);

/// Closed-form regular bounds against the true spectra of the regular graphs.
VerificationReport verify_regular(const Universe& u, const Claims& claims);

/// Biconnected graphs of minimum degree `delta` (2 or 3): dominance for
/// k = 5..8, the printed case constants, and bound soundness on the stratum.
VerificationReport verify_lemma(const Universe& u, const Claims& claims, int delta);

/// Every connected graph with a bridge or cut-point has a biconnected
/// partner with coefficient-wise no more cutsets.
VerificationReport verify_biconnected_reduction(const Universe& u, const Claims& claims);

/// Printed extension-count and edge-term tables against exact values.
VerificationReport verify_tables(const Universe& u, const Claims& claims);

/// Everything above, plus cross-report consistency.
VerificationReport verify_all(const Claims& claims, const VerifyOptions& options);

}  // namespace umrg

#endif
