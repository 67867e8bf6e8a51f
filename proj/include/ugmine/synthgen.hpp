#pragma once

// Synthetic uncertain-graph datasets with a planted discriminative subgraph.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ugmine/graph.hpp"

namespace ugmine {

struct SynthConfig {
  std::uint64_t seed = 0;
  std::size_t n_pos = 10;
  std::size_t n_neg = 10;
  std::size_t num_nodes = 20;
  std::size_t background_edges_per_graph = 20;
  double background_prob_lo = 0.1;
  double background_prob_hi = 1.0;
  std::vector<Edge> planted;  // empty = no planted pattern
  double planted_prob_pos = 0.9;
  double planted_prob_neg = 0.1;

  void validate() const;
};

/// Deterministic in cfg. Positives come first, then negatives; ids are
/// "pos<i>" / "neg<i>". Background probabilities are rounded to 4 decimals.
Dataset generate(const SynthConfig& cfg);

/// Random presets: "adhd-like", "adni-like", "hiv-like". Each plants the path
/// 0-1-2-3 with 0.9 / 0.1 probabilities.
std::optional<SynthConfig> preset_config(std::string_view name, std::uint64_t seed);

/// The four-graph, three-node example dataset (nodes A=0, B=1, C=2).
Dataset fig2_dataset();

/// Any preset by name, including "fig2" (which ignores the seed).
std::optional<Dataset> make_preset(std::string_view name, std::uint64_t seed);

struct DatasetStats {
  bool empty = true;
  std::size_t num_graphs = 0;
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::size_t num_nodes = 0;
  double mean_edges = 0.0;
  double mean_edge_prob = 0.0;  // pooled over every edge of every graph
};

DatasetStats dataset_stats(const Dataset& dataset);

}  // namespace ugmine
