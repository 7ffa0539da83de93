#pragma once

#include <optional>
#include <string>

#include "wetzel/analysis.hpp"
#include "wetzel/json_io.hpp"
#include "wetzel/zeta.hpp"

namespace wetzel {

// ---------------------------------------------------------------------------
// Stage runner and certificate pipeline.
//
// Stage k assembles the nodes w_i = zeta(i) for i < k, takes the forbidden
// values g_i(w_i) from the previously built members, runs the Erdos step,
// expands the result to monomial form and appends it to the family. Every
// requested check is recorded as an exact certificate: booleans plus the
// rational quantities compared, so a third party can re-check the run from
// the artifact alone (see verify_artifact).
// ---------------------------------------------------------------------------

struct RunConfig {
  std::uint64_t stages = 32;
  std::string enumeration = "zigzag-D";  // "zigzag-D" | "file"
  std::vector<QC> enumeration_points;    // consumed when enumeration == "file"
  std::string policy = "offset-half";    // | "offset-quarter-fallback" | "custom-file"
  std::optional<SelectionPolicy> policy_offsets;  // set when policy == "custom-file"
  std::string output = "wetzel-run.json";
  std::vector<std::string> verify_flags = default_verify_flags();
  std::uint64_t separating_search_size = 256;

  static std::vector<std::string> default_verify_flags();
  static const std::vector<std::string>& known_verify_flags();
  bool wants(std::string_view flag) const;
  SelectionPolicy selection_policy() const;
  void validate() const;

  bool operator==(const RunConfig& o) const = default;
};

struct TailSample {
  QC z;
  std::uint64_t terms = 0;  // N of the tail bound
  Rat bound;                // certified upper bound on sum_{i>=N} x^i/i!
  Rat partial;              // exact sum_{i=N}^{3N} x^i/i!
  bool pass = false;        // bound >= partial
};

struct StageCertificate {
  std::uint64_t stage = 0;
  NewtonSeries series;        // nodes + coefficients of this stage
  std::vector<QC> values;     // h(w_n) for n < stage
  std::vector<QC> forbidden;  // g_n(w_n) for n < stage
  Poly member;                // monomial expansion appended to the family
  std::optional<CoeffBoundsReport> bounds;
  std::optional<bool> in_d;
  std::optional<bool> diagonal;
  std::optional<bool> injectivity;
  std::optional<std::vector<TailSample>> tail;
  bool pass = true;
};

struct SeparationReport {
  bool pass = false;
  std::optional<QC> point;  // z0; unset when the search space was exhausted
  std::vector<QC> values;   // member values at z0, pairwise distinct
  std::uint64_t scanned = 0;
  std::uint64_t search_size = 0;
};

struct CensusEntry {
  std::uint64_t alpha = 0;
  QC z;
  std::uint64_t le_count = 0;
  std::uint64_t gt_count = 0;
  bool gt_in_d = true;
};

struct RunArtifact {
  RunConfig config;
  std::vector<QC> zeta_prefix;  // nodes consumed by the largest stage
  std::vector<StageCertificate> stages;
  std::optional<SeparationReport> separation;
  std::optional<std::vector<CensusEntry>> census;
  bool all_pass = true;

  FamilyRecord family() const;
};

// Runs all stages and checks. A failed certificate aborts with
// CertificateFailure naming the violated inequality (cannot happen for the
// shipped policies; the code path guards against regressions).
RunArtifact run_stages(const RunConfig& config);

// Separating-point search over the first search_size enumeration points.
SeparationReport find_separation(const FamilyRecord& family,
                                 const RunConfig& config,
                                 std::uint64_t search_size);

// Independent re-check of an artifact from its embedded quantities only:
// recomputes every value, bound and comparison from points + coefficients
// and cross-checks them against what the artifact claims. Does not run the
// construction.
struct VerifyReport {
  bool pass = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
};

VerifyReport verify_artifact(const RunArtifact& artifact);

// Exact sum_{i=from}^{to} x^i / i!.
Rat exp_partial_sum(const Rat& x, std::uint64_t from, std::uint64_t to);

// JSON codecs (strict on decode, insertion-ordered on encode).
Json config_to_json(const RunConfig& c);
RunConfig config_from_json(const Json& j);
Json stage_to_json(const StageCertificate& s);
StageCertificate stage_from_json(const Json& j);
Json separation_to_json(const SeparationReport& r);
SeparationReport separation_from_json(const Json& j);
Json artifact_to_json(const RunArtifact& a);
RunArtifact artifact_from_json(const Json& j);

// Deterministic byte form: identical artifacts serialize identically.
std::string artifact_to_string(const RunArtifact& a);
RunArtifact artifact_from_string(const std::string& bytes);

// File I/O; writes go to a temp file first, then rename.
std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& bytes);

// Human-readable one-line-per-stage summaries for standard output.
std::string run_summary(const RunArtifact& a);
std::string verify_summary(const VerifyReport& r);

}  // namespace wetzel
