#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "encov/bounds.hpp"
#include "encov/families.hpp"
#include "encov/graph.hpp"
#include "encov/report.hpp"

namespace encov {

inline constexpr int kScanEnumerateMax = 8;

struct EnumerateSource {
  int n_max = 0;
  bool connected_only = false;
};

struct Graph6FileSource {
  std::string path;
};

struct ParamRange {
  int lo = 0;
  int hi = 0;
};

/// Every parameter tuple in the product of the ranges, last index fastest.
struct FamilySweepSource {
  FamilyKind kind = FamilyKind::path;
  std::vector<ParamRange> ranges;
};

/// In-memory corpus (seeded random graphs, test fixtures).
struct GraphListSource {
  std::vector<Graph> graphs;
};

using ScanSource = std::variant<EnumerateSource, Graph6FileSource, FamilySweepSource, GraphListSource>;

/// "wheel(1..5,3..12)"; a bare integer is a one-point range.
FamilySweepSource parse_family_sweep(std::string_view text);

enum class ScanCheck { tau_bound, wang_ma, matching, equality_class };

std::string_view to_string(ScanCheck check);
/// Accepts the long names and the CLI spellings tau, wangma, equality.
std::optional<ScanCheck> parse_scan_check(std::string_view name);

struct ScanSpec {
  ScanSource source;
  std::vector<ClassTag> filter_any;  // keep graphs carrying any of these; empty keeps all
  std::vector<ScanCheck> checks;     // empty means all four
  std::string output_path;           // empty: no report file
  ReportFormat format = ReportFormat::json_lines;
  int jobs = 1;
  VerifyOptions verify;
  /// Continue after the last graph_id already present in output_path.
  bool resume = false;
  /// Stop after this many source graphs have been processed in this run.
  std::optional<long long> stop_after;
};

struct CheckSummary {
  ScanCheck check = ScanCheck::tau_bound;
  long long evaluated = 0;
  long long skipped = 0;  // wang_ma: c unavailable
  std::optional<double> min_slack;
  std::string argmin;
};

struct Violation {
  std::string graph_id;
  ScanCheck check = ScanCheck::tau_bound;
  double slack = 0.0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ScanSummary {
  long long graphs_scanned = 0;
  std::vector<CheckSummary> checks;
  std::vector<std::string> equality_cases;
  std::vector<Violation> violations;
  // E - 2 tau on graphs outside every class with a proof; reported, never a violation
  long long unbacked_graphs = 0;
  std::optional<double> unbacked_min_slack_tau;
  std::string unbacked_argmin;
  long long unbacked_below = 0;
  std::vector<std::string> notes;
  double wall_time = 0.0;

  bool ok() const { return violations.empty(); }
  const CheckSummary* find(ScanCheck check) const;
};

struct ScanResult {
  ScanSummary summary;
  std::vector<BoundReport> reports;  // in output order
};

/// Aggregates already-produced reports (sorted by graph_id).
ScanSummary summarize(std::span<const BoundReport> reports, std::span<const ScanCheck> checks);

ScanResult run_scan(const ScanSpec& spec);

enum class Objective { min_slack_tau, min_slack_wang_ma };

struct Extremal {
  std::string graph_id;
  double slack = 0.0;
};

/// Smallest k slacks, ties broken by graph_id, one entry per distinct id.
std::vector<Extremal> find_extremal(const ScanSpec& spec, Objective objective, std::size_t k);

std::string summary_to_json(const ScanSummary& summary, int indent = 2);

}  // namespace encov
