#include "beepmis/experiment.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "beepmis/engine.hpp"
#include "beepmis/error.hpp"
#include "beepmis/policy.hpp"
#include "beepmis/probability.hpp"
#include "beepmis/verify.hpp"

namespace beepmis {

namespace {

std::size_t parse_size(std::string_view token, std::string_view context) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw InvalidParameter(std::string(context) + ": malformed integer '" + std::string(token) + "'");
  }
  return value;
}

double parse_real(std::string_view token, std::string_view context) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw InvalidParameter(std::string(context) + ": malformed number '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const std::size_t at = s.find(sep);
    parts.push_back(s.substr(0, at));
    if (at == std::string_view::npos) break;
    s = s.substr(at + 1);
  }
  return parts;
}

struct FamilyKeyword {
  std::string_view name;
  Family family;
};

constexpr FamilyKeyword kFamilies[] = {
    {"er", Family::ErdosRenyi}, {"grid", Family::Grid}, {"clique", Family::Clique},
    {"cliquefam", Family::CliqueFamily}, {"path", Family::Path}, {"file", Family::File},
};

Family lookup_family(std::string_view name) {
  for (const auto& k : kFamilies) {
    if (k.name == name) return k.family;
  }
  throw InvalidParameter("unknown graph family '" + std::string(name) + "'");
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("edge probability must be in [0,1]");
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& k : kFamilies) {
    if (k.family == f) return k.name;
  }
  return "unknown";
}

GraphSource parse_graph_source(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidParameter("graph: expected <family>:<params>, got '" + std::string(text) + "'");
  }
  GraphSource src;
  src.family = lookup_family(text.substr(0, colon));
  const std::string_view args = text.substr(colon + 1);
  const auto parts = split(args, ',');
  auto expect = [&](std::size_t count) {
    if (parts.size() != count) {
      throw InvalidParameter("graph: wrong number of parameters in '" + std::string(text) + "'");
    }
  };
  switch (src.family) {
    case Family::ErdosRenyi:
      expect(2);
      src.first = parse_size(parts[0], "graph");
      src.p_edge = parse_real(parts[1], "graph");
      check_probability(src.p_edge);
      break;
    case Family::Grid:
      expect(2);
      src.first = parse_size(parts[0], "graph");
      src.second = parse_size(parts[1], "graph");
      break;
    case Family::Clique:
    case Family::CliqueFamily:
    case Family::Path:
      expect(1);
      src.first = parse_size(parts[0], "graph");
      break;
    case Family::File:
      if (args.empty()) throw InvalidParameter("graph: empty file path");
      src.path = std::string(args);
      break;
  }
  if (src.family != Family::File && src.first == 0) {
    throw InvalidParameter("graph: size must be >= 1 in '" + std::string(text) + "'");
  }
  return src;
}

Graph build_graph(const GraphSource& source, std::uint64_t seed) {
  switch (source.family) {
    case Family::ErdosRenyi: return erdos_renyi(source.first, source.p_edge, seed);
    case Family::Grid: return grid_graph(source.first, source.second);
    case Family::Clique: return complete_graph(source.first);
    case Family::CliqueFamily: return clique_family(source.first);
    case Family::Path: return path_graph(source.first);
    case Family::File: return read_edge_list_file(source.path);
  }
  throw InvalidParameter("graph: unknown family");
}

std::string param_string(const GraphSource& source) {
  switch (source.family) {
    case Family::ErdosRenyi: return format_float(source.p_edge);
    case Family::Grid: return std::to_string(source.first) + "x" + std::to_string(source.second);
    case Family::File: return source.path;
    default: return std::to_string(source.first);
  }
}

GraphFamily parse_graph_family(std::string_view text) {
  const std::size_t colon = text.find(':');
  GraphFamily fam;
  fam.family = lookup_family(text.substr(0, colon));
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  switch (fam.family) {
    case Family::ErdosRenyi:
      if (args.empty()) throw InvalidParameter("family: er needs an edge probability, e.g. er:0.5");
      fam.p_edge = parse_real(args, "family");
      check_probability(fam.p_edge);
      break;
    case Family::File:
      if (args.empty()) throw InvalidParameter("family: file needs a path");
      fam.path = std::string(args);
      break;
    default:
      if (colon != std::string_view::npos) {
        throw InvalidParameter("family: '" + std::string(family_name(fam.family)) + "' takes no parameters");
      }
  }
  return fam;
}

GraphSource instantiate(const GraphFamily& family, std::size_t size) {
  GraphSource src;
  src.family = family.family;
  src.p_edge = family.p_edge;
  src.path = family.path;
  src.first = size;
  if (family.family == Family::Grid) {
    auto side = static_cast<std::size_t>(std::sqrt(static_cast<double>(size)));
    while (side * side < size) ++side;
    while (side > 0 && (side - 1) * (side - 1) >= size) --side;
    src.first = src.second = side;
  }
  return src;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t size, std::uint64_t trial) {
  return mix64(mix64(mix64(master_seed) ^ size) ^ trial);
}

std::uint64_t graph_seed(std::uint64_t trial_seed) { return mix64(trial_seed ^ 0x6772617068ULL); }

void validate(const ExperimentSpec& spec) {
  if (spec.policies.empty()) throw InvalidParameter("experiment: no policies");
  if (spec.families.empty()) throw InvalidParameter("experiment: no graph families");
  if (spec.sizes.empty()) throw InvalidParameter("experiment: no n values");
  if (spec.trials == 0) throw InvalidParameter("experiment: trials must be >= 1");
  if (spec.jobs == 0) throw InvalidParameter("experiment: jobs must be >= 1");
  if (spec.max_rounds && *spec.max_rounds == 0) throw InvalidParameter("experiment: max_rounds must be >= 1");
  for (std::size_t n : spec.sizes) {
    if (n == 0) throw InvalidParameter("experiment: n values must be >= 1");
  }
  for (const auto& p : spec.policies) parse_policy(p);
  for (const auto& f : spec.families) parse_graph_family(f);
}

std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec) {
  validate(spec);
  std::vector<PolicyConfig> policies;
  for (const auto& p : spec.policies) policies.push_back(parse_policy(p));
  std::vector<GraphFamily> families;
  for (const auto& f : spec.families) families.push_back(parse_graph_family(f));

  const std::size_t per_family = policies.size() * spec.sizes.size() * spec.trials;
  std::vector<TrialRecord> records(families.size() * per_family);
  auto slot = [&](std::size_t fam, std::size_t pol, std::size_t size_idx, std::size_t trial) {
    return fam * per_family + (pol * spec.sizes.size() + size_idx) * spec.trials + trial;
  };

  // One task per generated graph; every policy runs on it.
  const std::size_t task_count = families.size() * spec.sizes.size() * spec.trials;
  auto run_task = [&](std::size_t task) {
    const std::size_t trial = task % spec.trials;
    const std::size_t size_idx = (task / spec.trials) % spec.sizes.size();
    const std::size_t fam = task / (spec.trials * spec.sizes.size());
    const std::size_t size = spec.sizes[size_idx];

    const GraphSource source = instantiate(families[fam], size);
    const std::uint64_t seed = trial_seed(spec.master_seed, size, trial);
    const Graph g = build_graph(source, graph_seed(seed));
    for (std::size_t pol = 0; pol < policies.size(); ++pol) {
      RunOptions options;
      options.max_rounds = spec.max_rounds;
      const RunResult result = run(g, policies[pol], seed, options);
      if (result.terminated && !check_mis(g, result.mis).ok()) {
        throw Error("internal error: terminated run produced an invalid MIS (seed " + std::to_string(seed) + ")");
      }
      TrialRecord& r = records[slot(fam, pol, size_idx, trial)];
      r.policy = policy_name(policies[pol]);
      r.graph = std::string(family_name(source.family));
      r.n = g.node_count();
      r.param = param_string(source);
      r.trial = trial;
      r.seed = seed;
      r.rounds = result.rounds;
      r.terminated = result.terminated;
      r.total_beeps = result.total_beeps;
      r.beeps_per_node = g.node_count() == 0
                             ? 0.0
                             : static_cast<double>(result.total_beeps) / static_cast<double>(g.node_count());
      r.mis_size = result.mis.size();
    }
  };

  const std::size_t workers = std::min(spec.jobs, task_count);
  if (workers <= 1) {
    for (std::size_t t = 0; t < task_count; ++t) run_task(t);
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < task_count; t = next++) {
        try {
          run_task(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = task_count;
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace beepmis
