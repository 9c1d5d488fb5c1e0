#include "beepmis/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <tuple>

#include "beepmis/error.hpp"

namespace beepmis {

double field_value(const TrialRecord& r, Field f) {
  switch (f) {
    case Field::Rounds: return static_cast<double>(r.rounds);
    case Field::TotalBeeps: return static_cast<double>(r.total_beeps);
    case Field::BeepsPerNode: return r.beeps_per_node;
    case Field::MisSize: return static_cast<double>(r.mis_size);
  }
  return 0.0;
}

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw EmptySample("summarize: empty sample");
  SummaryStats s;
  s.count = values.size();
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());

  // Sorting makes the sum independent of input order.
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (double x : sorted) sum += x;
  s.mean = std::clamp(sum / static_cast<double>(s.count), s.min, s.max);

  if (s.count > 1) {
    double ss = 0.0;
    for (double x : sorted) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(s.count - 1));
  }
  return s;
}

SummaryStats summarize(std::span<const TrialRecord> records, Field field) {
  std::vector<double> values;
  values.reserve(records.size());
  for (const auto& r : records) values.push_back(field_value(r, field));
  return summarize(values);
}

ReferenceCurves reference_curves(double n) {
  if (!(n >= 2.0)) throw InvalidParameter("reference_curves: n must be >= 2");
  const double lg = std::log2(n);
  return {lg, lg * lg, 2.5 * lg};
}

std::vector<GroupSummary> summarize_groups(std::span<const TrialRecord> records) {
  using Key = std::tuple<std::string, std::string, std::string, std::size_t>;
  std::map<Key, std::size_t> index;
  std::vector<std::vector<const TrialRecord*>> members;
  std::vector<GroupSummary> out;
  for (const auto& r : records) {
    auto [it, inserted] = index.try_emplace(Key{r.policy, r.graph, r.param, r.n}, out.size());
    if (inserted) {
      GroupSummary& g = out.emplace_back();
      g.policy = r.policy;
      g.graph = r.graph;
      g.param = r.param;
      g.n = r.n;
      members.emplace_back();
    }
    members[it->second].push_back(&r);
  }
  for (std::size_t g = 0; g < out.size(); ++g) {
    std::vector<double> rounds, bpn, mis;
    for (const TrialRecord* r : members[g]) {
      if (r->terminated) {
        rounds.push_back(static_cast<double>(r->rounds));
      } else {
        ++out[g].non_terminated;
      }
      bpn.push_back(r->beeps_per_node);
      mis.push_back(static_cast<double>(r->mis_size));
    }
    out[g].trials = members[g].size();
    if (!rounds.empty()) out[g].rounds = summarize(rounds);
    out[g].beeps_per_node = summarize(bpn);
    out[g].mis_size = summarize(mis);
  }
  return out;
}

std::string_view csv_header() {
  return "policy,graph,n,param,trial,seed,rounds,terminated,total_beeps,beeps_per_node,mis_size";
}

std::string format_float(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv_row(const TrialRecord& r) {
  std::string row;
  row += csv_field(r.policy) + ',';
  row += csv_field(r.graph) + ',';
  row += std::to_string(r.n) + ',';
  row += csv_field(r.param) + ',';
  row += std::to_string(r.trial) + ',';
  row += std::to_string(r.seed) + ',';
  row += std::to_string(r.rounds) + ',';
  row += r.terminated ? "true," : "false,";
  row += std::to_string(r.total_beeps) + ',';
  row += format_float(r.beeps_per_node) + ',';
  row += std::to_string(r.mis_size);
  return row;
}

void write_csv(std::ostream& out, std::span<const TrialRecord> records) {
  out << csv_header() << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

}  // namespace beepmis
