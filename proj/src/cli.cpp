#include "beepmis/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "beepmis/engine.hpp"
#include "beepmis/error.hpp"
#include "beepmis/experiment.hpp"
#include "beepmis/graph.hpp"
#include "beepmis/metrics.hpp"
#include "beepmis/policy.hpp"
#include "beepmis/verify.hpp"

namespace beepmis::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BEEPMIS_SEED"); env != nullptr && *env != '\0') {
    const std::string_view s(env);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw InvalidParameter("BEEPMIS_SEED is not an unsigned integer: '" + std::string(s) + "'");
    }
    return value;
  }
  return kDefaultSeed;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<NodeId>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

// Writes to `path`, or to `out` when path is "-".
template <class Fn>
void with_output(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidParameter("cannot write '" + path + "'");
  fn(file);
  file.flush();
  if (!file) throw InvalidParameter("write to '" + path + "' failed");
}

void print_summaries(std::ostream& os, const std::vector<TrialRecord>& records) {
  for (const GroupSummary& g : summarize_groups(records)) {
    os << g.policy << " " << g.graph << "(" << g.param << ") n=" << g.n << " trials=" << g.trials;
    if (g.rounds) {
      os << " rounds mean=" << format_float(g.rounds->mean) << " sd=" << format_float(g.rounds->stddev);
    } else {
      os << " rounds mean=n/a";
    }
    os << " non_terminated=" << g.non_terminated << " beeps_per_node mean=" << format_float(g.beeps_per_node.mean)
       << " sd=" << format_float(g.beeps_per_node.stddev);
    if (g.n >= 2) {
      const auto ref = reference_curves(static_cast<double>(g.n));
      os << " | log2n^2=" << format_float(ref.log2n_squared) << " 2.5log2n=" << format_float(ref.scaled);
    }
    os << '\n';
  }
}

struct ExperimentFlags {
  std::vector<std::string> policies;
  std::vector<std::string> families;
  std::vector<std::size_t> sizes;
  std::size_t trials = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_rounds;
  std::size_t jobs = 1;
  std::string output = "-";
};

void add_common_experiment_flags(CLI::App* cmd, ExperimentFlags& f) {
  cmd->add_option("--seed", f.seed, "Master seed (falls back to $BEEPMIS_SEED)");
  cmd->add_option("--max-rounds", f.max_rounds, "Round cap per run (default 64*ceil(log2(n+2))^2+64)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs,-j", f.jobs, "Concurrent trial workers")->check(CLI::PositiveNumber);
  cmd->add_option("--output,-o", f.output, "CSV output path, '-' for stdout");
}

int execute_experiment(const ExperimentFlags& f, std::ostream& out, std::ostream& err) {
  ExperimentSpec spec;
  spec.policies = f.policies;
  spec.families = f.families;
  spec.sizes = f.sizes;
  spec.trials = f.trials;
  spec.master_seed = resolve_seed(f.seed);
  spec.max_rounds = f.max_rounds;
  spec.jobs = f.jobs;
  validate(spec);

  const auto records = run_experiment(spec);
  with_output(f.output, out, [&](std::ostream& os) { write_csv(os, records); });
  print_summaries(f.output == "-" ? err : out, records);
  return kOk;
}

int cmd_run(const std::string& graph_text, const std::string& policy_text, std::optional<std::uint64_t> seed_flag,
            std::optional<std::uint64_t> max_rounds, const std::string& dump_mis, bool trace, std::ostream& out) {
  const GraphSource source = parse_graph_source(graph_text);
  const PolicyConfig policy = parse_policy(policy_text);
  const std::uint64_t seed = resolve_seed(seed_flag);
  const Graph g = build_graph(source, graph_seed(seed));

  RunOptions options;
  options.max_rounds = max_rounds;
  options.record_trace = trace;
  const RunResult result = run(g, policy, seed, options);

  const double bpn = g.node_count() == 0 ? 0.0 : static_cast<double>(result.total_beeps) / g.node_count();
  out << "policy=" << policy_name(policy) << " n=" << g.node_count() << " m=" << g.edge_count()
      << " seed=" << seed << " rounds=" << result.rounds << " terminated=" << (result.terminated ? "true" : "false")
      << " total_beeps=" << result.total_beeps << " beeps_per_node=" << format_float(bpn)
      << " mis_size=" << result.mis.size() << '\n';

  if (result.trace) {
    for (std::size_t t = 0; t < result.trace->size(); ++t) {
      const RoundOutcome& r = (*result.trace)[t];
      out << "round " << (t + 1) << " beeped=[" << join(r.beeped, ' ') << "] joined=[" << join(r.joined_mis, ' ')
          << "] inactive=[" << join(r.newly_inactive, ' ') << "]\n";
    }
  }
  if (!dump_mis.empty()) {
    with_output(dump_mis, out, [&](std::ostream& os) {
      for (NodeId v : result.mis) os << v << '\n';
    });
  }
  if (!result.terminated) return kNotTerminated;
  const VerifyReport report = check_mis(g, result.mis);
  if (!report.ok()) {
    out << "verification failed: " << report.witness() << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& set_path, std::ostream& out, std::ostream& err) {
  Graph g;
  std::vector<unsigned> set;
  try {
    g = parse_edge_list(read_file(graph_path));
  } catch (const ParseError& e) {
    err << graph_path << ": " << e.what() << '\n';
    return kUsage;
  }
  try {
    set = parse_set_file_text(read_file(set_path));
  } catch (const ParseError& e) {
    err << set_path << ": " << e.what() << '\n';
    return kUsage;
  }
  std::vector<NodeId> candidate(set.begin(), set.end());
  const VerifyReport report = check_mis(g, candidate);
  if (report.ok()) {
    out << "ok: independent and maximal (" << candidate.size() << " nodes)\n";
    return kOk;
  }
  out << (report.independent ? "not maximal: " : "not independent: ") << report.witness() << '\n';
  return kVerifyFailed;
}

int cmd_lowerbound(const ExperimentFlags& f, std::ostream& out, std::ostream& err) {
  for (std::size_t m : f.sizes) {
    if (m == 0) throw InvalidParameter("lowerbound: m values must be >= 1");
  }
  ExperimentFlags flags = f;
  flags.families = {"cliquefam"};
  ExperimentSpec spec;
  spec.policies = flags.policies;
  spec.families = flags.families;
  spec.sizes = flags.sizes;
  spec.trials = flags.trials;
  spec.master_seed = resolve_seed(flags.seed);
  spec.max_rounds = flags.max_rounds;
  spec.jobs = flags.jobs;
  validate(spec);

  const auto records = run_experiment(spec);
  with_output(flags.output, out, [&](std::ostream& os) { write_csv(os, records); });
  std::ostream& report = flags.output == "-" ? err : out;

  // Mean rounds counts non-terminated runs at the cap: here the cap hit is the signal.
  std::map<std::pair<std::string, std::size_t>, std::pair<double, std::size_t>> sum_rounds;
  std::map<std::pair<std::string, std::size_t>, std::size_t> stuck;
  for (const auto& r : records) {
    auto& [sum, count] = sum_rounds[{r.policy, r.n}];
    sum += static_cast<double>(r.rounds);
    ++count;
    if (!r.terminated) ++stuck[{r.policy, r.n}];
  }
  for (std::size_t m : spec.sizes) {
    const std::size_t n = clique_family(m).node_count();
    report << "m=" << m << " n=" << n;
    std::vector<double> means;
    for (const auto& p : spec.policies) {
      const std::string name = policy_name(parse_policy(p));
      const auto& [sum, count] = sum_rounds[{name, n}];
      const double mean = sum / static_cast<double>(count);
      means.push_back(mean);
      report << " " << name << ": mean_rounds=" << format_float(mean)
             << " non_terminated=" << format_float(static_cast<double>(stuck[{name, n}]) / static_cast<double>(count));
    }
    if (means.size() == 2 && means[0] > 0) report << " ratio=" << format_float(means[1] / means[0]);
    report << '\n';
  }
  return kOk;
}

}  // namespace

std::vector<unsigned> parse_set_file_text(const std::string& text) {
  std::vector<unsigned> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view token(line.data() + first, last - first + 1);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "expected a node index, got '" + std::string(token) + "'");
    }
    out.push_back(value);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Beeping-model maximal independent set simulator"};
  app.require_subcommand(1);

  // run
  std::string run_graph, run_policy = "feedback", run_dump;
  std::optional<std::uint64_t> run_seed, run_max_rounds;
  bool run_trace = false;
  auto* run_cmd = app.add_subcommand("run", "Execute a single run");
  run_cmd->add_option("--graph,-g", run_graph, "er:<n>,<p> | grid:<r>,<c> | clique:<d> | cliquefam:<m> | path:<n> | file:<path>")
      ->required();
  run_cmd->add_option("--policy,-p", run_policy, "feedback | feedback:f=..,init=..,cap=.. | sweep | const:<p>");
  run_cmd->add_option("--seed", run_seed, "Run seed (falls back to $BEEPMIS_SEED)");
  run_cmd->add_option("--max-rounds", run_max_rounds, "Round cap")->check(CLI::PositiveNumber);
  run_cmd->add_option("--dump-mis", run_dump, "Write the MIS, one index per line ('-' for stdout)");
  run_cmd->add_flag("--trace", run_trace, "Print every round");

  // generate
  std::string gen_graph, gen_output = "-";
  std::optional<std::uint64_t> gen_seed;
  auto* gen_cmd = app.add_subcommand("generate", "Write a generated graph as an edge list");
  gen_cmd->add_option("--graph,-g", gen_graph, "Graph source")->required();
  gen_cmd->add_option("--seed", gen_seed, "Seed for random families");
  gen_cmd->add_option("--output,-o", gen_output, "Output path, '-' for stdout");

  // verify
  std::string verify_graph, verify_set;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a set is a maximal independent set");
  verify_cmd->add_option("graph", verify_graph, "Edge-list file")->required();
  verify_cmd->add_option("set", verify_set, "Set file, one node index per line")->required();

  // experiment
  ExperimentFlags exp;
  exp.trials = 100;
  auto* exp_cmd = app.add_subcommand("experiment", "Monte-Carlo batch over n values, CSV output");
  exp_cmd->add_option("--policy,-p", exp.policies, "Policy (repeatable)")->delimiter(';');
  exp_cmd->add_option("--family,-f", exp.families, "er:<p> | grid | clique | cliquefam | path | file:<path>")
      ->required();
  exp_cmd->add_option("--n", exp.sizes, "Comma-separated n values")->delimiter(',')->required();
  exp_cmd->add_option("--trials,-t", exp.trials, "Trials per n")->check(CLI::PositiveNumber);
  add_common_experiment_flags(exp_cmd, exp);

  // reproduce-fig3 / reproduce-fig5
  ExperimentFlags fig3;
  fig3.trials = 100;
  fig3.sizes = {16, 32, 64, 128, 256, 512, 1024};
  auto* fig3_cmd = app.add_subcommand("reproduce-fig3", "Mean rounds on G(n,1/2): feedback vs sweep, 100 trials");
  fig3_cmd->add_option("--n", fig3.sizes, "Comma-separated n values")->delimiter(',');
  fig3_cmd->add_option("--trials,-t", fig3.trials, "Trials per n")->check(CLI::PositiveNumber);
  add_common_experiment_flags(fig3_cmd, fig3);

  ExperimentFlags fig5;
  fig5.trials = 200;
  fig5.sizes = {16, 32, 64, 128, 256, 512, 1024};
  auto* fig5_cmd = app.add_subcommand("reproduce-fig5",
                                      "Beeps per node on G(n,1/2) and grids: feedback vs sweep, 200 trials");
  fig5_cmd->add_option("--n", fig5.sizes, "Comma-separated n values")->delimiter(',');
  fig5_cmd->add_option("--trials,-t", fig5.trials, "Trials per n")->check(CLI::PositiveNumber);
  add_common_experiment_flags(fig5_cmd, fig5);

  // lowerbound
  ExperimentFlags lb;
  lb.trials = 20;
  lb.sizes = {4, 6, 8, 10};
  lb.policies = {"feedback", "sweep"};
  auto* lb_cmd = app.add_subcommand("lowerbound", "Rounds on clique families: feedback vs sweep, paired seeds");
  lb_cmd->add_option("--m", lb.sizes, "Comma-separated m values")->delimiter(',');
  lb_cmd->add_option("--policy,-p", lb.policies, "Policies (repeatable)")->delimiter(';');
  lb_cmd->add_option("--trials,-t", lb.trials, "Trials per m")->check(CLI::PositiveNumber);
  add_common_experiment_flags(lb_cmd, lb);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    // Show the subcommand's help if one was selected.
    const auto selected = app.get_subcommands();
    err << (selected.empty() ? app.help() : selected.front()->help());
    return kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run_graph, run_policy, run_seed, run_max_rounds, run_dump, run_trace, out);
    if (*gen_cmd) {
      const GraphSource source = parse_graph_source(gen_graph);
      const Graph g = build_graph(source, graph_seed(resolve_seed(gen_seed)));
      with_output(gen_output, out, [&](std::ostream& os) { os << write_edge_list(g); });
      return kOk;
    }
    if (*verify_cmd) return cmd_verify(verify_graph, verify_set, out, err);
    if (*exp_cmd) {
      if (exp.policies.empty()) exp.policies = {"feedback"};
      return execute_experiment(exp, out, err);
    }
    if (*fig3_cmd) {
      fig3.policies = {"feedback", "sweep"};
      fig3.families = {"er:0.5"};
      return execute_experiment(fig3, out, err);
    }
    if (*fig5_cmd) {
      fig5.policies = {"feedback", "sweep"};
      fig5.families = {"er:0.5", "grid"};
      return execute_experiment(fig5, out, err);
    }
    if (*lb_cmd) return cmd_lowerbound(lb, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace beepmis::cli
