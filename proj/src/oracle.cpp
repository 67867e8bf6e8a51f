#include "ugmine/oracle.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "ugmine/miner.hpp"

#include "ugmine/error.hpp"

namespace ugmine {

std::uint64_t world_count(const Dataset& dataset) {
  std::uint64_t total = 1;
  for (const auto& g : dataset.graphs()) {
    if (g.num_edges() >= 64) return std::numeric_limits<std::uint64_t>::max();
    std::uint64_t factor = std::uint64_t{1} << g.num_edges();
    if (total > std::numeric_limits<std::uint64_t>::max() / factor)
      return std::numeric_limits<std::uint64_t>::max();
    total *= factor;
  }
  return total;
}

void for_each_world(const Dataset& dataset, std::uint64_t max_worlds,
                    const std::function<void(const World&)>& fn) {
  const std::uint64_t count = world_count(dataset);
  if (count > max_worlds)
    throw BudgetError("possible-world enumeration needs " + std::to_string(count) +
                      " worlds, budget is " + std::to_string(max_worlds));

  // Per graph, per edge mask: the implied certain graph and Pr[G~ => G].
  const std::size_t n = dataset.size();
  std::vector<std::vector<CertainGraph>> implied(n);
  std::vector<std::vector<double>> implied_prob(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto edges = dataset.graph(i).edges();
    const std::uint64_t masks = std::uint64_t{1} << edges.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<Edge> present;
      double p = 1.0;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (mask >> k & 1) {
          present.push_back(edges[k].edge);
          p *= edges[k].probability;
        } else {
          p *= 1.0 - edges[k].probability;
        }
      }
      implied[i].emplace_back(dataset.num_nodes(), std::move(present));
      implied_prob[i].push_back(p);
    }
  }

  World world;
  world.certain_graphs.resize(n);
  std::vector<std::uint64_t> mask(n, 0);
  for (std::size_t i = 0; i < n; ++i) world.certain_graphs[i] = implied[i][0];
  for (std::uint64_t w = 0; w < count; ++w) {
    world.probability = 1.0;
    for (std::size_t i = 0; i < n; ++i) world.probability *= implied_prob[i][mask[i]];
    fn(world);
    for (std::size_t i = 0; i < n; ++i) {
      if (++mask[i] < implied[i].size()) {
        world.certain_graphs[i] = implied[i][mask[i]];
        break;
      }
      mask[i] = 0;
      world.certain_graphs[i] = implied[i][0];
    }
  }
}

std::vector<World> enumerate_worlds(const Dataset& dataset, std::uint64_t max_worlds) {
  std::vector<World> out;
  for_each_world(dataset, max_worlds, [&](const World& w) { out.push_back(w); });
  return out;
}

namespace {

// Per-world support pair (a, b) of g.
std::pair<std::size_t, std::size_t> world_support(const Subgraph& g, const Dataset& dataset,
                                                  const World& world) {
  std::size_t a = 0, b = 0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (!contains(g, world.certain_graphs[i])) continue;
    if (dataset.label(i) == Label::Positive)
      ++a;
    else
      ++b;
  }
  return {a, b};
}

}  // namespace

std::vector<std::vector<double>> oracle_joint(const Subgraph& g, const Dataset& dataset,
                                              std::uint64_t max_worlds) {
  std::vector<std::vector<double>> joint(dataset.n_pos() + 1,
                                         std::vector<double>(dataset.n_neg() + 1, 0.0));
  for_each_world(dataset, max_worlds, [&](const World& w) {
    auto [a, b] = world_support(g, dataset, w);
    joint[a][b] += w.probability;
  });
  return joint;
}

ExtendedScore oracle_measure(const Subgraph& g, const Dataset& dataset,
                             const MeasureSpec& measure, const ScoreFunctionSpec& score,
                             std::uint64_t max_worlds) {
  measure.validate();
  dataset.require_both_classes();
  const std::size_t np = dataset.n_pos(), nn = dataset.n_neg();

  double exp_sum = 0.0, phi_mass = 0.0;
  bool pos_inf = false;
  // group key -> (smallest exact score, mass)
  std::map<double, std::pair<double, double>> groups;

  for_each_world(dataset, max_worlds, [&](const World& w) {
    if (!(w.probability > 0.0)) return;
    auto [a, b] = world_support(g, dataset, w);
    const double s = eval_score(score, a, b, np, nn);
    if (s == kInf)
      pos_inf = true;
    else
      exp_sum += w.probability * s;
    if (measure.phi && s >= *measure.phi) phi_mass += w.probability;
    auto [it, inserted] = groups.try_emplace(score_group_key(s), s, 0.0);
    it->second.first = std::min(it->second.first, s);
    it->second.second += w.probability;
  });

  switch (measure.kind) {
    case MeasureKind::Exp:
      return pos_inf ? kInf : exp_sum;
    case MeasureKind::PhiPr:
      return std::min(phi_mass, 1.0);
    case MeasureKind::Median: {
      double cdf = 0.0;
      std::optional<double> best;
      for (const auto& [key, group] : groups) {
        cdf += group.second;
        if (cdf > 0.5 + kProbabilityTolerance) break;
        best = group.first;
      }
      return best.value_or(groups.begin()->second.first);
    }
    case MeasureKind::Mode: {
      double best_score = groups.begin()->second.first;
      double best_mass = groups.begin()->second.second;
      for (const auto& [key, group] : groups)
        if (group.second > best_mass + kProbabilityTolerance) {
          best_mass = group.second;
          best_score = group.first;
        }
      return best_score;
    }
  }
  return 0.0;
}

Dataset random_tiny_dataset(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr std::size_t kNodes = 4;
  std::uniform_int_distribution<int> graph_count(2, 6), edge_count(1, 3);
  std::uniform_int_distribution<int> pair_pick(0, 5), coin(0, 1), certain(0, 9);
  std::uniform_real_distribution<double> prob(0.05, 1.0);
  static constexpr Edge kPairs[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

  const int n = graph_count(rng);
  std::vector<UncertainGraph> graphs;
  std::vector<Label> labels;
  for (int i = 0; i < n; ++i) {
    std::vector<WeightedEdge> edges;
    const int m = edge_count(rng);
    while (static_cast<int>(edges.size()) < m) {
      Edge e = kPairs[pair_pick(rng)];
      bool dup = false;
      for (const auto& we : edges) dup = dup || we.edge == e;
      if (dup) continue;
      // occasional certain edges exercise the p = 1 path
      double p = certain(rng) == 0 ? 1.0 : std::round(prob(rng) * 1000.0) / 1000.0;
      edges.push_back({e, p});
    }
    graphs.emplace_back(kNodes, std::move(edges));
    labels.push_back(coin(rng) ? Label::Positive : Label::Negative);
  }
  labels[0] = Label::Positive;
  labels[1] = Label::Negative;
  std::shuffle(labels.begin(), labels.end(), rng);
  return Dataset(kNodes, std::move(graphs), std::move(labels));
}

Subgraph random_connected_subgraph(const Dataset& dataset, std::uint64_t seed) {
  const CertainGraph universe = union_graph(dataset);
  if (universe.edges().empty()) throw ContractError("dataset has no edges");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  std::vector<Edge> edges{universe.edges()[pick(universe.edges().size())]};
  const std::size_t target = 1 + pick(3);
  while (edges.size() < target) {
    std::vector<Edge> frontier;
    for (const auto& e : universe.edges()) {
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
      for (const auto& s : edges)
        if (e.u == s.u || e.u == s.v || e.v == s.u || e.v == s.v) {
          frontier.push_back(e);
          break;
        }
    }
    if (frontier.empty()) break;
    edges.push_back(frontier[pick(frontier.size())]);
  }
  return Subgraph::from_edges(std::move(edges));
}

namespace {

bool close(double x, double y, double tol) {
  if (std::isinf(x) || std::isinf(y)) return x == y;
  return std::fabs(x - y) <= tol;
}

}  // namespace

std::string check_against_oracle(const Subgraph& g, const Dataset& dataset, double tolerance,
                                 std::uint64_t max_worlds) {
  std::ostringstream why;
  const auto dp = joint_distribution(g, dataset);
  const auto brute = oracle_joint(g, dataset, max_worlds);
  for (std::size_t a = 0; a <= dataset.n_pos(); ++a)
    for (std::size_t b = 0; b <= dataset.n_neg(); ++b)
      if (!close(dp.cell(a, b), brute[a][b], tolerance)) {
        why << "joint cell (" << a << "," << b << ") of " << g.to_string() << ": dp "
            << format_real(dp.cell(a, b)) << " oracle " << format_real(brute[a][b]);
        return why.str();
      }

  for (ScoreKind kind : {ScoreKind::Confidence, ScoreKind::FrequencyRatio, ScoreKind::GTest,
                         ScoreKind::HsicLinear}) {
    const ScoreFunctionSpec spec{kind, 0.0};
    const ScoreTable table = score_table(spec, dataset.n_pos(), dataset.n_neg());
    for (MeasureKind mk :
         {MeasureKind::Exp, MeasureKind::Median, MeasureKind::Mode, MeasureKind::PhiPr}) {
      MeasureSpec measure{mk, std::nullopt};
      if (mk == MeasureKind::PhiPr) measure.phi = default_phi(kind);
      const double fast = evaluate_measure(dp, table, measure);
      const double slow = oracle_measure(g, dataset, measure, spec, max_worlds);
      if (!close(fast, slow, tolerance)) {
        why << measure_kind_name(mk) << "-" << score_kind_name(kind) << " of "
            << g.to_string() << ": dp " << format_real(fast) << " oracle "
            << format_real(slow);
        return why.str();
      }
    }
  }
  return {};
}

OracleCheckReport oracle_check(const Dataset* input, int trials, std::uint64_t seed,
                               std::uint64_t max_worlds) {
  if (trials < 1) throw ContractError("trials must be >= 1");
  if (input) {
    input->require_both_classes();
    const auto count = world_count(*input);
    if (count > max_worlds)
      throw BudgetError("input has " + std::to_string(count) +
                        " possible worlds, budget is " + std::to_string(max_worlds));
  }
  OracleCheckReport report;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Dataset data = input ? *input : random_tiny_dataset(rng());
    const Subgraph g = random_connected_subgraph(data, rng());
    ++report.trials;
    std::string mismatch = check_against_oracle(g, data, 1e-9, max_worlds);
    if (mismatch.empty())
      ++report.matched;
    else
      report.mismatches.push_back("trial " + std::to_string(t) + ": " + mismatch);
  }
  return report;
}

}  // namespace ugmine
