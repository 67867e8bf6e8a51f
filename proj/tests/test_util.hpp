#pragma once

// Shared brute-force helpers for the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "ugmine/graph.hpp"
#include "ugmine/synthgen.hpp"

namespace ugmine::testutil {

/// Every connected non-empty edge subset of `universe` (bitmask scan; keep the
/// universe small).
inline std::vector<Subgraph> all_connected_subgraphs(const CertainGraph& universe,
                                                     std::size_t max_edges = 64) {
  const auto edges = universe.edges();
  std::vector<Subgraph> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<Edge> pick;
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (mask >> k & 1) pick.push_back(edges[k]);
    if (pick.size() <= max_edges && is_connected(pick))
      out.push_back(Subgraph::from_canonical_unchecked(std::move(pick)));
  }
  return out;
}

/// Around ten graphs over a small universe (<= max_universe_edges edges).
inline Dataset small_random_dataset(std::uint64_t seed, std::size_t graphs = 10,
                                    std::size_t nodes = 5, std::size_t max_universe_edges = 8) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (NodeId u = 0; u < nodes; ++u)
    for (NodeId v = u + 1; v < nodes; ++v) pairs.push_back({u, v});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min(pairs.size(), max_universe_edges));
  std::uniform_real_distribution<double> p(0.05, 1.0), coin(0, 1);
  std::vector<UncertainGraph> gs;
  std::vector<Label> labels;
  for (std::size_t i = 0; i < graphs; ++i) {
    std::vector<WeightedEdge> es;
    for (const auto& e : pairs)
      if (coin(rng) < 0.7) es.push_back({e, std::round(p(rng) * 100) / 100});
    gs.emplace_back(nodes, std::move(es));
    labels.push_back(i % 2 == 0 ? Label::Positive : Label::Negative);
  }
  return Dataset(nodes, std::move(gs), std::move(labels));
}

}  // namespace ugmine::testutil
