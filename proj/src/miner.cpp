#include "ugmine/miner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "ugmine/error.hpp"

namespace ugmine {

void MiningConfig::validate() const {
  if (top < 1) throw ContractError("top must be >= 1");
  if (!(min_sup >= 0.0 && min_sup <= 1.0))
    throw ContractError("min_sup must lie in [0,1]");
  if (max_edges && *max_edges < 1) throw ContractError("max_edges must be >= 1");
  if (threads < 1) throw ContractError("threads must be >= 1");
  if (score.cap_epsilon < 0.0) throw ContractError("cap_epsilon must be >= 0");
  measure.validate();
}

bool ranks_before(const MinedFeature& a, const MinedFeature& b) {
  if (a.measure_value != b.measure_value) return a.measure_value > b.measure_value;
  if (a.subgraph.size() != b.subgraph.size()) return a.subgraph.size() < b.subgraph.size();
  return std::lexicographical_compare(a.subgraph.edges().begin(), a.subgraph.edges().end(),
                                      b.subgraph.edges().begin(), b.subgraph.edges().end());
}

namespace {

// Largest edge of `edges` (sorted) whose removal leaves the rest connected.
std::optional<std::size_t> largest_removable(std::span<const Edge> edges) {
  std::vector<Edge> rest;
  rest.reserve(edges.size());
  for (std::size_t i = edges.size(); i-- > 0;) {
    rest.assign(edges.begin(), edges.end());
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_connected(rest)) return i;
  }
  return std::nullopt;
}

// Is `added` the largest removable edge of parent + added?
bool is_canonical_extension(std::span<const Edge> parent, const Edge& added) {
  std::vector<Edge> trial;
  trial.reserve(parent.size() + 1);
  for (std::size_t i = parent.size(); i-- > 0;) {
    if (parent[i] < added) break;  // only larger edges can pre-empt `added`
    trial.assign(parent.begin(), parent.end());
    trial[i] = added;  // (parent - parent[i]) + added
    if (is_connected(trial)) return false;
  }
  return true;
}

struct Universe {
  std::vector<Edge> edges;                          // sorted
  std::vector<std::vector<std::uint32_t>> incident;  // node -> edge indices

  explicit Universe(const CertainGraph& g) : edges(g.edges().begin(), g.edges().end()) {
    incident.resize(g.num_nodes());
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
      incident[edges[i].u].push_back(i);
      incident[edges[i].v].push_back(i);
    }
  }

  std::uint32_t index_of(const Edge& e) const {
    return static_cast<std::uint32_t>(
        std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  }

  // Candidate edges adjacent to the node set of `members` but not in it,
  // ascending and unique.
  std::vector<std::uint32_t> frontier(std::span<const std::uint32_t> members) const {
    std::vector<std::uint32_t> out;
    for (auto m : members)
      for (auto node : {edges[m].u, edges[m].v})
        for (auto e : incident[node]) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<std::uint32_t> result;
    std::set_difference(out.begin(), out.end(), members.begin(), members.end(),
                        std::back_inserter(result));
    return result;
  }
};

struct Occurrence {
  std::uint32_t graph;
  double prob;  // containment probability in that graph, > 0
};

struct SearchNode {
  std::vector<std::uint32_t> members;  // sorted universe edge indices
  std::vector<Occurrence> occurrences;  // sorted by graph
};

struct RankLess {
  bool operator()(const MinedFeature& a, const MinedFeature& b) const {
    return ranks_before(a, b);
  }
};

class Engine {
 public:
  Engine(const Dataset& dataset, const MiningConfig& cfg, const MiningObserver* observer)
      : dataset_(dataset),
        cfg_(cfg),
        observer_(observer),
        universe_(union_graph(dataset)),
        scores_(score_table(cfg.score, dataset.n_pos(), dataset.n_neg())),
        envelope_(envelope_table(cfg.score, dataset.n_pos(), dataset.n_neg())),
        bound_applies_(cfg.pruning.bound && (cfg.measure.kind == MeasureKind::Exp ||
                                             cfg.measure.kind == MeasureKind::PhiPr)) {
    occurrences_.resize(universe_.edges.size());
    for (std::uint32_t gi = 0; gi < dataset.size(); ++gi)
      for (const auto& we : dataset.graph(gi).edges())
        occurrences_[universe_.index_of(we.edge)].push_back({gi, we.probability});
    class_slot_.resize(dataset.size());
    for (std::size_t k = 0; k < dataset.n_pos(); ++k)
      class_slot_[dataset.positive_indices()[k]] = k;
    for (std::size_t k = 0; k < dataset.n_neg(); ++k)
      class_slot_[dataset.negative_indices()[k]] = k;
  }

  MiningResult run() {
    const std::size_t roots = universe_.edges.size();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      MiningStats local;
      for (std::size_t i = next++; i < roots; i = next++) {
        SearchNode node;
        node.members = {static_cast<std::uint32_t>(i)};
        node.occurrences.reserve(occurrences_[i].size());
        for (const auto& o : occurrences_[i]) node.occurrences.push_back(o);
        visit(node, local);
      }
      std::lock_guard lock(mutex_);
      stats_.visited += local.visited;
      stats_.evaluated += local.evaluated;
      stats_.frequency_pruned += local.frequency_pruned;
      stats_.bound_pruned += local.bound_pruned;
    };
    const int threads = std::max(1, cfg_.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    MiningResult result;
    result.features.assign(candidates_.begin(), candidates_.end());
    result.stats = stats_;
    return result;
  }

 private:
  Subgraph to_subgraph(const SearchNode& node) const {
    std::vector<Edge> edges;
    edges.reserve(node.members.size());
    for (auto m : node.members) edges.push_back(universe_.edges[m]);
    return Subgraph::from_canonical_unchecked(std::move(edges));
  }

  JointSupportDistribution joint_of(const SearchNode& node) const {
    std::vector<double> qp(dataset_.n_pos(), 0.0), qn(dataset_.n_neg(), 0.0);
    for (const auto& o : node.occurrences) {
      if (dataset_.label(o.graph) == Label::Positive)
        qp[class_slot_[o.graph]] = o.prob;
      else
        qn[class_slot_[o.graph]] = o.prob;
    }
    return JointSupportDistribution(support_distribution(qp), support_distribution(qn));
  }

  double theta() const { return theta_.load(std::memory_order_acquire); }

  void try_admit(MinedFeature feature) {
    std::lock_guard lock(mutex_);
    const auto top = static_cast<std::size_t>(cfg_.top);
    if (candidates_.size() >= top && !ranks_before(feature, *std::prev(candidates_.end())))
      return;
    candidates_.insert(std::move(feature));
    ++stats_.admissions;
    if (candidates_.size() > top) candidates_.erase(std::prev(candidates_.end()));
    if (candidates_.size() == top) {
      double t = std::prev(candidates_.end())->measure_value;
      if (t != theta_.load(std::memory_order_relaxed)) {
        theta_.store(t, std::memory_order_release);
        if (observer_ && observer_->on_theta) observer_->on_theta(t);
      }
    }
  }

  // Subtree below a node with this bound can never enter the final list.
  bool bound_excludes(double bound) const {
    const double t = theta();
    if (!(bound < t)) return false;
    if (std::isinf(t)) return true;
    return bound < t - 1e-12 * std::max(1.0, std::fabs(t));
  }

  void visit(const SearchNode& node, MiningStats& stats) {
    ++stats.visited;
    if (observer_ && observer_->on_visit) {
      std::lock_guard lock(observer_mutex_);
      observer_->on_visit(to_subgraph(node));
    }

    double support = 0.0;
    for (const auto& o : node.occurrences) support += o.prob;
    const double exp_freq = support / static_cast<double>(dataset_.size());
    const bool frequent = exp_freq > cfg_.min_sup;

    if (frequent) {
      ++stats.evaluated;
      JointSupportDistribution joint = joint_of(node);
      const double value = evaluate_measure(joint, scores_, cfg_.measure);
      if (value >= theta()) {
        MinedFeature f{to_subgraph(node), value, exp_freq, std::nullopt};
        if (cfg_.retain_joint) f.joint = joint;
        try_admit(std::move(f));
      }
      if (bound_applies_ && theta() > -kInf) {
        const double bound = cfg_.measure.kind == MeasureKind::Exp
                                 ? ub_exp(joint, envelope_)
                                 : ub_phi_pr(joint, envelope_, *cfg_.measure.phi);
        if (bound_excludes(bound)) {
          ++stats.bound_pruned;
          return;
        }
      }
    } else if (cfg_.pruning.frequency) {
      ++stats.frequency_pruned;
      return;
    }

    if (cfg_.max_edges && node.members.size() >= static_cast<std::size_t>(*cfg_.max_edges))
      return;

    std::vector<Edge> parent_edges;
    parent_edges.reserve(node.members.size());
    for (auto m : node.members) parent_edges.push_back(universe_.edges[m]);

    for (auto e : universe_.frontier(node.members)) {
      if (!is_canonical_extension(parent_edges, universe_.edges[e])) continue;
      SearchNode child;
      child.members = node.members;
      child.members.insert(std::lower_bound(child.members.begin(), child.members.end(), e), e);
      // containment of the child = parent containment * p(e), graph by graph
      const auto& occ = occurrences_[e];
      auto it = occ.begin();
      for (const auto& o : node.occurrences) {
        while (it != occ.end() && it->graph < o.graph) ++it;
        if (it == occ.end()) break;
        if (it->graph == o.graph) child.occurrences.push_back({o.graph, o.prob * it->prob});
      }
      visit(child, stats);
    }
  }

  const Dataset& dataset_;
  const MiningConfig& cfg_;
  const MiningObserver* observer_;
  Universe universe_;
  ScoreTable scores_;
  ScoreTable envelope_;
  bool bound_applies_;
  std::vector<std::vector<Occurrence>> occurrences_;  // per universe edge
  std::vector<std::size_t> class_slot_;               // graph -> index within its class

  std::mutex mutex_;
  std::mutex observer_mutex_;
  std::set<MinedFeature, RankLess> candidates_;
  std::atomic<double> theta_{-kInf};
  MiningStats stats_;
};

}  // namespace

std::optional<Subgraph> canonical_parent(const Subgraph& s) {
  if (s.size() <= 1) return std::nullopt;
  auto idx = largest_removable(s.edges());
  if (!idx) throw ContractError("subgraph is not connected");
  std::vector<Edge> rest(s.edges().begin(), s.edges().end());
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*idx));
  return Subgraph::from_canonical_unchecked(std::move(rest));
}

std::vector<Subgraph> children(const std::optional<Subgraph>& s,
                               const CertainGraph& universe) {
  std::vector<Subgraph> out;
  if (!s) {
    for (const auto& e : universe.edges()) out.push_back(Subgraph::from_canonical_unchecked({e}));
    return out;
  }
  Universe u(universe);
  std::vector<std::uint32_t> members;
  for (const auto& e : s->edges()) {
    if (!universe.has_edge(e)) throw ContractError("subgraph edge outside the universe");
    members.push_back(u.index_of(e));
  }
  for (auto idx : u.frontier(members)) {
    const Edge& e = u.edges[idx];
    if (!is_canonical_extension(s->edges(), e)) continue;
    std::vector<Edge> edges(s->edges().begin(), s->edges().end());
    edges.insert(std::lower_bound(edges.begin(), edges.end(), e), e);
    out.push_back(Subgraph::from_canonical_unchecked(std::move(edges)));
  }
  return out;
}

MiningResult mine(const Dataset& dataset, const MiningConfig& cfg,
                  const MiningObserver* observer) {
  cfg.validate();
  dataset.require_both_classes();
  if (observer && observer->on_dataset) observer->on_dataset(dataset);
  Engine engine(dataset, cfg, observer);
  return engine.run();
}

MiningResult mine_exhaustive(const Dataset& dataset, const MiningConfig& cfg,
                             const MiningObserver* observer) {
  MiningConfig all = cfg;
  all.pruning = PruningOptions{false, false};
  return mine(dataset, all, observer);
}

}  // namespace ugmine
