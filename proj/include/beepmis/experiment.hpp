#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beepmis/graph.hpp"
#include "beepmis/metrics.hpp"

namespace beepmis {

enum class Family { ErdosRenyi, Grid, Clique, CliqueFamily, Path, File };

std::string_view family_name(Family f);

/// A fully specified graph, parsed from
///   er:<n>,<p> | grid:<r>,<c> | clique:<d> | cliquefam:<m> | path:<n> | file:<path>
struct GraphSource {
  Family family = Family::Path;
  std::size_t first = 0;   // n, rows, d or m
  std::size_t second = 0;  // cols (grid only)
  double p_edge = 0.0;     // er only
  std::string path;        // file only
};

GraphSource parse_graph_source(std::string_view text);

/// `seed` only matters for random families.
Graph build_graph(const GraphSource& source, std::uint64_t seed);

/// Value of the CSV `param` column: p for er, "<r>x<c>" for grid, d / m / n
/// for clique / cliquefam / path, the path for file.
std::string param_string(const GraphSource& source);

/// A graph family with the size left open, parsed from
///   er:<p> | grid | clique | cliquefam | path | file:<path>
/// grid with size n becomes a ceil(sqrt n) x ceil(sqrt n) lattice; cliquefam
/// takes n as m; file ignores n.
struct GraphFamily {
  Family family = Family::ErdosRenyi;
  double p_edge = 0.5;
  std::string path;
};

GraphFamily parse_graph_family(std::string_view text);
GraphSource instantiate(const GraphFamily& family, std::size_t size);

/// Per-trial seed: mix64(mix64(mix64(master) ^ size) ^ trial), with mix64 the
/// SplitMix64 finalizer. Independent of the policy, so policies run on the
/// same trial are paired (same graph, same random stream).
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t size, std::uint64_t trial);

/// Seed for the graph generator of a trial, decorrelated from the run seed.
std::uint64_t graph_seed(std::uint64_t trial_seed);

struct ExperimentSpec {
  std::vector<std::string> policies{"feedback"};
  std::vector<std::string> families;
  std::vector<std::size_t> sizes;
  std::size_t trials = 100;
  std::uint64_t master_seed = 1;
  std::optional<std::uint64_t> max_rounds;
  std::size_t jobs = 1;
};

/// Throws InvalidParameter for an unusable spec.
void validate(const ExperimentSpec& spec);

/// Runs every (family, size, trial) graph under every policy. Rows come back
/// ordered by (family, policy, size, trial) regardless of `jobs`. Every
/// terminated run is checked with check_mis; a failure throws Error.
std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec);

}  // namespace beepmis
