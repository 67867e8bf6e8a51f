#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "ugmine/distribution.hpp"
#include "ugmine/error.hpp"
#include "ugmine/synthgen.hpp"

using namespace ugmine;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double class_exp_freq(const Subgraph& g, const Dataset& d, Label label) {
  double sum = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.label(i) == label) {
      sum += containment_probability(g, d.graph(i));
      ++n;
    }
  return sum / static_cast<double>(n);
}

const Subgraph kPath = Subgraph::from_edges({{0, 1}, {1, 2}, {2, 3}});

}  // namespace

TEST(ExamplePreset, MatchesCheckedInFixture) {
  EXPECT_EQ(serialize_dataset(fig2_dataset()), slurp(UGM_FIXTURE_DIR "/fig2.json"));
  auto s = dataset_stats(fig2_dataset());
  EXPECT_EQ(s.num_graphs, 4u);
  EXPECT_EQ(s.n_pos, 2u);
  EXPECT_EQ(s.n_neg, 2u);
  EXPECT_EQ(s.num_nodes, 3u);
}

TEST(Presets, AdhdLikeStatistics) {
  auto d = *make_preset("adhd-like", 1);
  auto s = dataset_stats(d);
  EXPECT_EQ(s.n_pos, 100u);
  EXPECT_EQ(s.n_neg, 100u);
  EXPECT_EQ(s.num_nodes, 116u);
  EXPECT_NEAR(s.mean_edges, 484.7, 0.02 * 484.7);
  EXPECT_NEAR(s.mean_edge_prob, 0.55, 0.02);
}

TEST(Presets, OtherNames) {
  EXPECT_TRUE(make_preset("adni-like", 0));
  EXPECT_TRUE(make_preset("hiv-like", 0));
  EXPECT_FALSE(make_preset("nope", 0));
  EXPECT_FALSE(preset_config("fig2", 0));
}

TEST(Generate, Deterministic) {
  auto cfg = *preset_config("hiv-like", 77);
  EXPECT_EQ(generate(cfg), generate(cfg));
  cfg.seed = 78;
  EXPECT_NE(generate(cfg), generate(*preset_config("hiv-like", 77)));
}

TEST(Generate, PlantedEdgesOverwriteBackground) {
  SynthConfig cfg;
  cfg.num_nodes = 5;
  cfg.background_edges_per_graph = 10;  // every pair
  cfg.planted = {{0, 1}, {1, 2}, {2, 3}};
  auto d = generate(cfg);
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(d.graph(i).num_edges(), 10u);
    const double want = d.label(i) == Label::Positive ? 0.9 : 0.1;
    for (const auto& e : cfg.planted) EXPECT_EQ(d.graph(i).probability(e), want);
  }
}

TEST(Generate, NoSignalWhenProbabilitiesMatch) {
  SynthConfig cfg = *preset_config("hiv-like", 3);
  cfg.planted_prob_pos = cfg.planted_prob_neg = 0.5;
  auto d = generate(cfg);
  EXPECT_EQ(class_exp_freq(kPath, d, Label::Positive), class_exp_freq(kPath, d, Label::Negative));
}

TEST(Generate, PlantedSignalMonotone) {
  double prev = -1;
  for (double p : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    SynthConfig cfg = *preset_config("hiv-like", 3);
    cfg.planted_prob_pos = p;
    const double f = class_exp_freq(kPath, generate(cfg), Label::Positive);
    EXPECT_GE(f, prev);
    prev = f;
  }
}

TEST(Generate, Validation) {
  SynthConfig cfg;
  cfg.num_nodes = 4;
  cfg.background_edges_per_graph = 7;
  EXPECT_THROW(generate(cfg), ContractError);
  cfg.background_edges_per_graph = 2;
  cfg.planted = {{3, 9}};
  EXPECT_THROW(generate(cfg), ContractError);
  cfg.planted.clear();
  cfg.planted_prob_pos = 0;
  EXPECT_THROW(generate(cfg), ContractError);
  cfg.planted_prob_pos = 0.9;
  cfg.n_neg = 0;
  EXPECT_THROW(generate(cfg), ContractError);
}

TEST(Stats, EmptyDataset) {
  auto s = dataset_stats(Dataset());
  EXPECT_TRUE(s.empty);
  EXPECT_EQ(s.num_graphs, 0u);
  EXPECT_EQ(s.mean_edges, 0.0);
}
