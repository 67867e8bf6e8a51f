#pragma once

// Top-t discriminative subgraph mining over uncertain graphs.
//
// Connected subgraphs of the dataset's union graph are enumerated by reverse
// search: the parent of a subgraph S is S minus the largest edge whose removal
// keeps S connected. Every connected edge set is reached exactly once and every
// ancestor is a subgraph of its descendants, so anti-monotone bounds can cut
// whole subtrees.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ugmine/distribution.hpp"
#include "ugmine/graph.hpp"
#include "ugmine/scores.hpp"

namespace ugmine {

struct PruningOptions {
  bool frequency = true;  // cut subtrees with exp_freq <= min_sup
  bool bound = true;      // cut subtrees whose upper bound cannot beat theta
};

struct MiningConfig {
  int top = 100;
  /// Features need exp_freq > min_sup to be reported.
  double min_sup = 0.2;
  MeasureSpec measure{MeasureKind::PhiPr, 1.0};
  ScoreFunctionSpec score{ScoreKind::FrequencyRatio, 0.0};
  std::optional<int> max_edges;
  PruningOptions pruning;
  int threads = 1;
  /// Keep each reported feature's joint support distribution.
  bool retain_joint = false;

  /// Throws ContractError on out-of-range fields.
  void validate() const;
};

struct MinedFeature {
  Subgraph subgraph;
  ExtendedScore measure_value = 0.0;
  double exp_freq = 0.0;
  std::optional<JointSupportDistribution> joint;
};

/// Rank order: higher measure, then fewer edges, then smaller edge list.
bool ranks_before(const MinedFeature& a, const MinedFeature& b);

struct MiningStats {
  std::uint64_t visited = 0;           // search-tree nodes generated
  std::uint64_t evaluated = 0;         // nodes whose measure was computed
  std::uint64_t frequency_pruned = 0;
  std::uint64_t bound_pruned = 0;
  std::uint64_t admissions = 0;        // insertions into the candidate list
};

/// Optional instrumentation. Callbacks are serialized internally.
struct MiningObserver {
  std::function<void(const Subgraph&)> on_visit;
  std::function<void(ExtendedScore)> on_theta;
  /// Sees the dataset handed to the miner.
  std::function<void(const Dataset&)> on_dataset;
};

struct MiningResult {
  std::vector<MinedFeature> features;  // sorted by rank, at most cfg.top
  MiningStats stats;
};

/// Parent in the enumeration tree, or nullopt for single-edge subgraphs.
std::optional<Subgraph> canonical_parent(const Subgraph& s);

/// Children of `s` (nullopt = root) within `universe`, ascending by added edge.
std::vector<Subgraph> children(const std::optional<Subgraph>& s,
                               const CertainGraph& universe);

/// Branch-and-bound search. Requires both classes to be present.
MiningResult mine(const Dataset& dataset, const MiningConfig& cfg,
                  const MiningObserver* observer = nullptr);

/// Reference path with every pruning switch forced off.
MiningResult mine_exhaustive(const Dataset& dataset, const MiningConfig& cfg,
                             const MiningObserver* observer = nullptr);

// Feature list file:
//   {"measure": "phi-pr", "score": "ratio", "features": [
//     {"rank": 1, "edges": [[u, v], ...], "measure_value": x, "exp_freq": y}, ...]}
// Infinite measure values are written as the strings "inf" / "-inf".
std::string features_to_json(std::span<const MinedFeature> features, const MiningConfig& cfg);

/// Reads back the features of a feature list file (joint distributions are not
/// stored). Throws ParseError.
std::vector<MinedFeature> parse_features_json(std::string_view text);

}  // namespace ugmine
