#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "basewright/tables.hpp"

namespace bw {

constexpr int kReportSchemaVersion = 1;
// orbits up to this size are verified in the permutation image
constexpr std::size_t kOrbitMethodLimit = 20000;

struct VerificationReport {
  std::string table;
  std::string family;
  int d = 0;
  int q = 0;
  int k = 0;
  std::string sign;
  std::string action;
  std::string n;  // decimal
  std::size_t candidate_size = 0;
  std::string stabilizer_order;  // order of the pointwise stabilizer in the permutation image
  bool pass = false;
  std::string method;  // "orbit" or "commutant"
  double seconds = 0;
  std::string row;
  std::vector<std::pair<std::string, std::string>> chosen_params;
  std::vector<std::string> notes;
  std::vector<std::string> points;
  std::string error;

  bool operator==(const VerificationReport&) const = default;
};

// method: "auto", "orbit" or "commutant"
VerificationReport verify_candidate(const BaseCandidate& B, const std::string& method = "auto");
VerificationReport verify_table(const std::string& table, Family f, int d, int q, Sign sign = Sign::None,
                                const std::string& method = "auto");

// Stabilizer of the candidate in the matrix group, computed from the
// algebra {M : U_i M <= U_i}; returns the number of isometries in it divided
// by the number of scalars.  nullopt when the algebra is too big to list.
std::optional<BigInt> commutant_stabilizer_order(const MatrixGroup& G, const std::vector<Subspace>& pts,
                                                 std::uint64_t max_elements = 1ULL << 24);

struct SweepRow {
  std::string instance;
  std::string group;  // short label, e.g. "Sp(6,2)" or "M24"
  std::string category;  // "classical", "coset", "partitions", "affine", "mathieu"
  std::string action;
  std::uint64_t n = 0;
  std::string order;
  int b_upper = 0;
  std::optional<int> b_exact;
  int b_lower = 0;
  int ceil_log_n_plus_1 = 0;
  bool within_bound = false;
  bool exceptional = false;
  bool expected_exceptional = false;
  bool determined = true;
  std::string error;
  double seconds = 0;

  bool operator==(const SweepRow&) const = default;
};

struct SweepOptions {
  std::uint64_t max_degree = 2000;
  std::uint64_t budget = 2000000;
  int threads = 0;  // 0: hardware concurrency
  bool include_classical = true;
};

struct SweepSummary {
  std::vector<SweepRow> rows;
  bool all_within_bound = true;
  bool exceptional_matches = true;
  bool all_determined = true;
  std::vector<std::string> strict_violators;  // b > ceil(log n) + 1
  std::vector<std::string> unexpected;        // exceptional but not in the list, or the reverse
  // strict violators are exactly {M24} when M24 is in range, exceptional
  // rows match the list, and every row was decided
  bool pass() const;
};

std::uint64_t ceil_log2(std::uint64_t n);
// 2^(b-1) >= n, i.e. b >= log2(n) + 1
bool at_least_log_plus_one(int b, std::uint64_t n);

SweepSummary theorem_sweep(const SweepOptions& opt);
SweepSummary theorem_sweep(std::uint64_t max_degree, std::uint64_t budget);

struct DegreeAuditRow {
  std::string instance;
  std::string kind;
  std::string formula;
  std::string enumerated;
  bool equal = false;
  std::string error;
  bool operator==(const DegreeAuditRow&) const = default;
};
std::vector<ActionSpec> default_degree_suite();
std::vector<DegreeAuditRow> audit_degrees(const std::vector<ActionSpec>& instances);

// Mathieu rows: order check, greedy and order bound
struct MathieuRow {
  std::string name;
  std::uint64_t n = 0;
  std::string order;
  std::string expected_order;
  int greedy = 0;
  int lower = 0;
  int ceil_log_n_plus_1 = 0;
  bool operator==(const MathieuRow&) const = default;
};
MathieuRow mathieu_row(const std::string& name);

// Random (d-2)-tuples of non-singular 1-spaces for GO+ / GO-; each witness is
// checked to be a non-scalar isometry fixing every 1-space of its tuple.
struct WitnessTrials {
  std::string group;
  int count = 0;
  int failures = 0;
  std::map<std::string, int> cases;  // witness_case_name -> count
};
WitnessTrials witness_trials(Family f, int d, int q, int count, std::uint64_t seed = 1);

// JSON, schema_version kReportSchemaVersion
std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& r);
std::string to_json(const SweepSummary& s);
std::string to_json(const std::vector<DegreeAuditRow>& r);
std::string to_json(const BaseCandidate& B);
VerificationReport verification_from_json(const std::string& text);
std::vector<VerificationReport> verifications_from_json(const std::string& text);
SweepSummary sweep_from_json(const std::string& text);
std::vector<DegreeAuditRow> degrees_from_json(const std::string& text);

}  // namespace bw
