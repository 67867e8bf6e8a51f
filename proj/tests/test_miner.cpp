#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "ugmine/error.hpp"
#include "ugmine/miner.hpp"
#include "ugmine/synthgen.hpp"

using namespace ugmine;
using ugmine::testutil::all_connected_subgraphs;
using ugmine::testutil::small_random_dataset;

namespace {

const ScoreKind kScores[] = {ScoreKind::Confidence, ScoreKind::FrequencyRatio, ScoreKind::GTest,
                             ScoreKind::HsicLinear};
const MeasureKind kMeasures[] = {MeasureKind::Exp, MeasureKind::Median, MeasureKind::Mode,
                                 MeasureKind::PhiPr};

MiningConfig config(MeasureKind m, ScoreKind s, int top, double min_sup) {
  MiningConfig cfg;
  cfg.top = top;
  cfg.min_sup = min_sup;
  cfg.measure = {m, m == MeasureKind::PhiPr ? std::optional<double>(default_phi(s)) : std::nullopt};
  cfg.score = {s, default_cap_epsilon(m, s)};
  return cfg;
}

// Scores every connected subgraph directly.
std::vector<MinedFeature> brute_force(const Dataset& d, const MiningConfig& cfg) {
  const ScoreTable table = score_table(cfg.score, d.n_pos(), d.n_neg());
  std::vector<MinedFeature> all;
  for (auto& g : all_connected_subgraphs(union_graph(d))) {
    const double f = expected_frequency(g, d);
    if (!(f > cfg.min_sup)) continue;
    const double v = evaluate_measure(joint_distribution(g, d), table, cfg.measure);
    all.push_back({g, v, f, std::nullopt});
  }
  std::sort(all.begin(), all.end(), ranks_before);
  if (all.size() > static_cast<std::size_t>(cfg.top)) all.erase(all.begin() + cfg.top, all.end());
  return all;
}

std::vector<Edge> edges_of(const Subgraph& s) { return {s.edges().begin(), s.edges().end()}; }

}  // namespace

TEST(CanonicalParent, Examples) {
  EXPECT_EQ(edges_of(*canonical_parent(Subgraph::from_edges({{0, 1}, {1, 2}}))),
            (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(edges_of(*canonical_parent(Subgraph::from_edges({{0, 1}, {0, 2}, {1, 2}}))),
            (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_FALSE(canonical_parent(Subgraph::from_edges({{3, 4}})));
}

TEST(Children, RootOfTriangle) {
  CertainGraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(children(std::nullopt, tri).size(), 3u);
}

TEST(Children, InverseOfParent) {
  // every child's parent is the node it came from
  CertainGraph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  for (const auto& s : all_connected_subgraphs(k5, 4))
    for (const auto& c : children(s, k5)) EXPECT_EQ(*canonical_parent(c), s);
}

TEST(ReverseSearch, ReachesEveryConnectedSubgraphOnce) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Dataset d = small_random_dataset(seed, 6, 6, 10);
    const CertainGraph u = union_graph(d);
    std::multiset<Subgraph> seen;
    MiningObserver obs;
    obs.on_visit = [&](const Subgraph& s) { seen.insert(s); };
    MiningConfig cfg = config(MeasureKind::Exp, ScoreKind::Confidence, 1, 0.0);
    mine_exhaustive(d, cfg, &obs);
    auto expected = all_connected_subgraphs(u);
    EXPECT_EQ(seen.size(), expected.size());
    EXPECT_EQ(std::set<Subgraph>(seen.begin(), seen.end()).size(), expected.size());
    for (const auto& s : expected) EXPECT_EQ(seen.count(s), 1u);
  }
}

TEST(ReverseSearch, TriangleVisitsSeven) {
  MiningConfig cfg = config(MeasureKind::Exp, ScoreKind::Confidence, 1, 0.0);
  EXPECT_EQ(mine_exhaustive(fig2_dataset(), cfg).stats.visited, 7u);
}

TEST(Mine, ExampleTopFeature) {
  auto r = mine(fig2_dataset(), config(MeasureKind::Exp, ScoreKind::Confidence, 1, 0.2));
  ASSERT_EQ(r.features.size(), 1u);
  EXPECT_EQ(edges_of(r.features[0].subgraph), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_NEAR(r.features[0].measure_value, 0.85954176, 1e-12);
}

TEST(Mine, MinSupOneLeavesNothing) {
  auto r = mine(fig2_dataset(), config(MeasureKind::Exp, ScoreKind::Confidence, 10, 1.0));
  EXPECT_TRUE(r.features.empty());
}

TEST(Mine, LargeTopReturnsAllSurvivors) {
  // AC has expected frequency 0.05; the other five subgraphs survive 0.2.
  auto r = mine(fig2_dataset(), config(MeasureKind::Exp, ScoreKind::Confidence, 100, 0.2));
  EXPECT_EQ(r.features.size(), 3u);
  auto all = mine(fig2_dataset(), config(MeasureKind::Exp, ScoreKind::Confidence, 100, 0.0));
  EXPECT_EQ(all.features.size(), 7u);
}

TEST(Mine, SortedByRankAndAboveMinSup) {
  const Dataset d = small_random_dataset(11);
  auto r = mine(d, config(MeasureKind::PhiPr, ScoreKind::FrequencyRatio, 15, 0.1));
  for (std::size_t i = 1; i < r.features.size(); ++i)
    EXPECT_TRUE(ranks_before(r.features[i - 1], r.features[i]));
  for (const auto& f : r.features) EXPECT_GT(f.exp_freq, 0.1);
}

TEST(Mine, MatchesBruteForceScoring) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Dataset d = small_random_dataset(100 + seed);
    for (auto m : kMeasures)
      for (auto s : kScores) {
        const auto cfg = config(m, s, 5, 0.15);
        const auto got = mine(d, cfg).features;
        const auto want = brute_force(d, cfg);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
          if (std::isinf(want[i].measure_value))
            EXPECT_EQ(got[i].measure_value, want[i].measure_value);
          else
            EXPECT_NEAR(got[i].measure_value, want[i].measure_value, 1e-9);
          EXPECT_NEAR(got[i].exp_freq, expected_frequency(got[i].subgraph, d), 1e-12);
        }
      }
  }
}

TEST(Mine, PruningIsSoundAcrossCombinations) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Dataset d = small_random_dataset(200 + seed);
    for (auto m : kMeasures)
      for (auto s : kScores)
        for (int top : {1, 3, 10}) {
          const auto cfg = config(m, s, top, 0.1);
          const auto pruned = mine(d, cfg);
          const auto full = mine_exhaustive(d, cfg);
          ASSERT_EQ(pruned.features.size(), full.features.size());
          for (std::size_t i = 0; i < full.features.size(); ++i) {
            EXPECT_EQ(pruned.features[i].subgraph, full.features[i].subgraph);
            EXPECT_EQ(pruned.features[i].measure_value, full.features[i].measure_value);
          }
          EXPECT_LE(pruned.stats.visited, full.stats.visited);
        }
  }
}

TEST(Mine, ThreadCountDoesNotChangeResult) {
  const Dataset d = generate(*preset_config("hiv-like", 5));
  auto cfg = config(MeasureKind::PhiPr, ScoreKind::FrequencyRatio, 20, 0.2);
  const auto one = mine(d, cfg);
  cfg.threads = 4;
  const auto four = mine(d, cfg);
  EXPECT_EQ(features_to_json(one.features, cfg), features_to_json(four.features, cfg));
  const Dataset small = small_random_dataset(9, 12, 6, 12);
  auto c2 = config(MeasureKind::Median, ScoreKind::Confidence, 7, 0.05);
  const auto a = mine(small, c2);
  c2.threads = 3;
  const auto b = mine(small, c2);
  EXPECT_EQ(features_to_json(a.features, c2), features_to_json(b.features, c2));
}

TEST(Mine, ThetaNeverDecreases) {
  const Dataset d = small_random_dataset(31, 12, 6, 10);
  std::vector<double> thetas;
  MiningObserver obs;
  obs.on_theta = [&](double t) { thetas.push_back(t); };
  mine(d, config(MeasureKind::Exp, ScoreKind::HsicLinear, 4, 0.05), &obs);
  ASSERT_FALSE(thetas.empty());
  EXPECT_TRUE(std::is_sorted(thetas.begin(), thetas.end()));
}

TEST(Mine, MaxEdgesLimitsSize) {
  auto cfg = config(MeasureKind::Exp, ScoreKind::Confidence, 50, 0.0);
  cfg.max_edges = 1;
  for (const auto& f : mine(small_random_dataset(4), cfg).features) EXPECT_EQ(f.subgraph.size(), 1u);
}

TEST(Mine, RetainJointKeepsDistribution) {
  auto cfg = config(MeasureKind::Exp, ScoreKind::Confidence, 3, 0.2);
  cfg.retain_joint = true;
  for (const auto& f : mine(fig2_dataset(), cfg).features) {
    ASSERT_TRUE(f.joint);
    EXPECT_NEAR(f.joint->total(), 1.0, 1e-12);
  }
}

TEST(Mine, Contracts) {
  Dataset one_class(2, {UncertainGraph(2, {{{0, 1}, 0.5}})}, {Label::Positive});
  EXPECT_THROW(mine(one_class, MiningConfig{}), ContractError);
  MiningConfig bad;
  bad.top = 0;
  EXPECT_THROW(mine(fig2_dataset(), bad), ContractError);
  MiningConfig phi_on_exp;
  phi_on_exp.measure = {MeasureKind::Exp, 1.0};
  EXPECT_THROW(mine(fig2_dataset(), phi_on_exp), ContractError);
}

TEST(FeatureJson, RoundTrip) {
  auto cfg = config(MeasureKind::Exp, ScoreKind::FrequencyRatio, 10, 0.0);
  cfg.score.cap_epsilon = 0;  // let infinities through
  const auto mined = mine(fig2_dataset(), cfg).features;
  const auto text = features_to_json(mined, cfg);
  EXPECT_NE(text.find("\"inf\""), std::string::npos) << text;
  const auto back = parse_features_json(text);
  ASSERT_EQ(back.size(), mined.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].subgraph, mined[i].subgraph);
    EXPECT_EQ(back[i].measure_value, mined[i].measure_value);
    EXPECT_EQ(back[i].exp_freq, mined[i].exp_freq);
  }
  EXPECT_THROW(parse_features_json(R"({"features": [{"edges": [[0, 1], [2, 3]]}]})"), ParseError);
  EXPECT_THROW(parse_features_json("[]"), ParseError);
}
