#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace beepmis {

/// One CSV row: the outcome of a single trial.
struct TrialRecord {
  std::string policy;
  std::string graph;  // family name: er, grid, clique, cliquefam, path, file
  std::size_t n = 0;  // node count of the generated graph
  std::string param;  // family parameter, e.g. "0.5" or "8x8"
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t rounds = 0;
  bool terminated = false;
  std::uint64_t total_beeps = 0;
  double beeps_per_node = 0.0;
  std::size_t mis_size = 0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

enum class Field { Rounds, TotalBeeps, BeepsPerNode, MisSize };

double field_value(const TrialRecord& r, Field f);

struct SummaryStats {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;
  bool sample_stddev = true;  // divisor N-1 (N = 1 gives 0)
  double min = 0.0;
  double max = 0.0;
};

/// Mean and sample standard deviation. Throws EmptySample on empty input.
SummaryStats summarize(std::span<const double> values);
SummaryStats summarize(std::span<const TrialRecord> records, Field field);

struct ReferenceCurves {
  double log2n;
  double log2n_squared;
  double scaled;  // 2.5 * log2 n
};

/// Throws InvalidParameter for n < 2.
ReferenceCurves reference_curves(double n);

/// Per (policy, graph, param, n) aggregate. Round statistics cover terminated
/// trials only; non-terminated ones are counted separately.
struct GroupSummary {
  std::string policy;
  std::string graph;
  std::string param;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t non_terminated = 0;
  std::optional<SummaryStats> rounds;
  SummaryStats beeps_per_node;
  SummaryStats mis_size;
};

/// Groups in order of first appearance.
std::vector<GroupSummary> summarize_groups(std::span<const TrialRecord> records);

// CSV. Column order is fixed:
//   policy,graph,n,param,trial,seed,rounds,terminated,total_beeps,beeps_per_node,mis_size
// Fields containing ',' or '"' are quoted RFC 4180 style.

std::string_view csv_header();
std::string format_float(double x);  // %.6g
std::string to_csv_row(const TrialRecord& r);
void write_csv(std::ostream& out, std::span<const TrialRecord> records);

}  // namespace beepmis
