#pragma once

// Brute-force possible-worlds reference. Exponential; for tiny inputs only.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ugmine/distribution.hpp"
#include "ugmine/graph.hpp"
#include "ugmine/scores.hpp"

namespace ugmine {

inline constexpr std::uint64_t kDefaultMaxWorlds = std::uint64_t{1} << 20;

/// One world of the whole dataset: a certain graph per uncertain graph.
struct World {
  std::vector<CertainGraph> certain_graphs;
  double probability = 0.0;
};

/// Product of 2^|E_i|, saturating at UINT64_MAX.
std::uint64_t world_count(const Dataset& dataset);

/// Calls `fn` once per world. Graph i's world is selected by a bitmask over its
/// edges (bit k = k-th edge present); masks advance like an odometer with
/// graph 0 fastest. Throws BudgetError when world_count exceeds max_worlds.
void for_each_world(const Dataset& dataset, std::uint64_t max_worlds,
                    const std::function<void(const World&)>& fn);

std::vector<World> enumerate_worlds(const Dataset& dataset,
                                    std::uint64_t max_worlds = kDefaultMaxWorlds);

/// Pr[a, b] summed literally over worlds.
std::vector<std::vector<double>> oracle_joint(const Subgraph& g, const Dataset& dataset,
                                              std::uint64_t max_worlds = kDefaultMaxWorlds);

/// The measure evaluated from the per-world scores, with the same grouping,
/// tie and fallback conventions as the distribution module.
ExtendedScore oracle_measure(const Subgraph& g, const Dataset& dataset,
                             const MeasureSpec& measure, const ScoreFunctionSpec& score,
                             std::uint64_t max_worlds = kDefaultMaxWorlds);

/// Random dataset with 2-6 graphs on 4 nodes, 1-3 edges each, both classes.
Dataset random_tiny_dataset(std::uint64_t seed);

/// Random connected subgraph of the dataset's union graph with 1-3 edges.
Subgraph random_connected_subgraph(const Dataset& dataset, std::uint64_t seed);

/// Compares the dynamic-programming joint distribution and all four measures
/// under all four score functions against the possible-worlds oracle.
/// Returns a description of the first mismatch, or an empty string.
std::string check_against_oracle(const Subgraph& g, const Dataset& dataset,
                                 double tolerance = 1e-9,
                                 std::uint64_t max_worlds = kDefaultMaxWorlds);

struct OracleCheckReport {
  int trials = 0;
  int matched = 0;
  std::vector<std::string> mismatches;
};

/// Runs `trials` comparisons. With an input dataset each trial draws a random
/// subgraph of it; otherwise each trial also draws a random tiny dataset.
OracleCheckReport oracle_check(const Dataset* input, int trials, std::uint64_t seed,
                               std::uint64_t max_worlds = kDefaultMaxWorlds);

}  // namespace ugmine
