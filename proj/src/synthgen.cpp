#include "ugmine/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "ugmine/error.hpp"

namespace ugmine {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Pair index k in [0, n(n-1)/2) -> edge, row-major over u < v.
Edge pair_at(std::size_t n, std::size_t k) {
  std::size_t u = 0;
  std::size_t row = n - 1;
  while (k >= row) {
    k -= row;
    ++u;
    --row;
  }
  return Edge{static_cast<NodeId>(u), static_cast<NodeId>(u + 1 + k)};
}

bool in_unit(double p) { return p > 0.0 && p <= 1.0; }

}  // namespace

void SynthConfig::validate() const {
  if (n_pos < 1 || n_neg < 1) throw ContractError("both classes need at least one graph");
  if (num_nodes < 2) throw ContractError("need at least two nodes");
  const std::size_t pairs = num_nodes * (num_nodes - 1) / 2;
  if (background_edges_per_graph > pairs)
    throw ContractError("background_edges_per_graph " +
                        std::to_string(background_edges_per_graph) + " exceeds the " +
                        std::to_string(pairs) + " possible node pairs");
  if (!in_unit(background_prob_lo) || !in_unit(background_prob_hi) ||
      background_prob_lo > background_prob_hi)
    throw ContractError("background probability range must lie in (0,1] with lo <= hi");
  if (!in_unit(planted_prob_pos) || !in_unit(planted_prob_neg))
    throw ContractError("planted probabilities must lie in (0,1]");
  for (const auto& e : planted) {
    if (e.u == e.v || std::max(e.u, e.v) >= num_nodes)
      throw ContractError("planted edge does not fit the node universe");
  }
}

Dataset generate(const SynthConfig& cfg) {
  cfg.validate();
  const std::size_t pairs = cfg.num_nodes * (cfg.num_nodes - 1) / 2;
  const std::size_t total = cfg.n_pos + cfg.n_neg;

  std::vector<UncertainGraph> graphs;
  std::vector<Label> labels;
  std::vector<std::string> ids;
  std::vector<std::size_t> pool(pairs);

  for (std::size_t gi = 0; gi < total; ++gi) {
    const bool positive = gi < cfg.n_pos;
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(gi)));
    std::uniform_real_distribution<double> prob(cfg.background_prob_lo, cfg.background_prob_hi);

    // partial Fisher-Yates: first k slots become a uniform k-subset
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::map<Edge, double> edges;
    for (std::size_t k = 0; k < cfg.background_edges_per_graph; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, pairs - 1);
      std::swap(pool[k], pool[pick(rng)]);
      double p = std::round(prob(rng) * 1e4) / 1e4;
      p = std::clamp(p, std::max(1e-4, cfg.background_prob_lo), cfg.background_prob_hi);
      edges[pair_at(cfg.num_nodes, pool[k])] = p;
    }
    for (const auto& e : cfg.planted)
      edges[Edge::make(e.u, e.v)] = positive ? cfg.planted_prob_pos : cfg.planted_prob_neg;

    std::vector<WeightedEdge> list;
    list.reserve(edges.size());
    for (const auto& [e, p] : edges) list.push_back({e, p});
    graphs.emplace_back(cfg.num_nodes, std::move(list));
    labels.push_back(positive ? Label::Positive : Label::Negative);
    ids.push_back(positive ? "pos" + std::to_string(gi) : "neg" + std::to_string(gi - cfg.n_pos));
  }
  return Dataset(cfg.num_nodes, std::move(graphs), std::move(labels), std::move(ids));
}

std::optional<SynthConfig> preset_config(std::string_view name, std::uint64_t seed) {
  SynthConfig cfg;
  cfg.seed = seed;
  cfg.planted = {Edge{0, 1}, Edge{1, 2}, Edge{2, 3}};
  cfg.planted_prob_pos = 0.9;
  cfg.planted_prob_neg = 0.1;
  // Background counts leave room for the three planted edges so that the mean
  // edge count lands on the target statistics. Probability ranges are centred
  // on the target mean edge probability.
  if (name == "adhd-like") {
    cfg.n_pos = cfg.n_neg = 100;
    cfg.num_nodes = 116;
    cfg.background_edges_per_graph = 482;
    cfg.background_prob_lo = 0.10;
    cfg.background_prob_hi = 1.00;
  } else if (name == "adni-like") {
    cfg.n_pos = cfg.n_neg = 18;
    cfg.num_nodes = 90;
    cfg.background_edges_per_graph = 2017;
    cfg.background_prob_lo = 0.18;
    cfg.background_prob_hi = 1.00;
  } else if (name == "hiv-like") {
    cfg.n_pos = cfg.n_neg = 25;
    cfg.num_nodes = 90;
    cfg.background_edges_per_graph = 478;
    cfg.background_prob_lo = 0.76;
    cfg.background_prob_hi = 1.00;
  } else {
    return std::nullopt;
  }
  return cfg;
}

Dataset fig2_dataset() {
  const Edge ab{0, 1}, bc{1, 2}, ac{0, 2};
  std::vector<UncertainGraph> graphs{
      UncertainGraph(3, {{ab, 0.8}, {bc, 0.9}, {ac, 0.1}}),
      UncertainGraph(3, {{ab, 0.9}, {bc, 0.8}, {ac, 0.1}}),
      UncertainGraph(3, {{ab, 0.1}, {bc, 0.9}}),
      UncertainGraph(3, {{ab, 0.8}, {bc, 0.1}}),
  };
  return Dataset(3, std::move(graphs),
                 {Label::Positive, Label::Positive, Label::Negative, Label::Negative},
                 {"G1", "G2", "G3", "G4"});
}

std::optional<Dataset> make_preset(std::string_view name, std::uint64_t seed) {
  if (name == "fig2") return fig2_dataset();
  if (auto cfg = preset_config(name, seed)) return generate(*cfg);
  return std::nullopt;
}

DatasetStats dataset_stats(const Dataset& dataset) {
  DatasetStats s;
  s.num_nodes = dataset.num_nodes();
  s.num_graphs = dataset.size();
  s.n_pos = dataset.n_pos();
  s.n_neg = dataset.n_neg();
  s.empty = dataset.empty();
  if (s.empty) return s;
  std::size_t edges = 0;
  double prob_sum = 0.0;
  for (const auto& g : dataset.graphs()) {
    edges += g.num_edges();
    for (const auto& we : g.edges()) prob_sum += we.probability;
  }
  s.mean_edges = static_cast<double>(edges) / static_cast<double>(dataset.size());
  s.mean_edge_prob = edges ? prob_sum / static_cast<double>(edges) : 0.0;
  return s;
}

}  // namespace ugmine
