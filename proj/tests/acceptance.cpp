// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "ugmine/distribution.hpp"
#include "ugmine/featurize.hpp"
#include "ugmine/miner.hpp"
#include "ugmine/oracle.hpp"
#include "ugmine/synthgen.hpp"

using namespace ugmine;
using testutil::all_connected_subgraphs;
using testutil::small_random_dataset;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const ScoreKind kScores[] = {ScoreKind::Confidence, ScoreKind::FrequencyRatio, ScoreKind::GTest,
                             ScoreKind::HsicLinear};
const MeasureKind kMeasures[] = {MeasureKind::Exp, MeasureKind::Median, MeasureKind::Mode,
                                 MeasureKind::PhiPr};

MeasureSpec measure_for(MeasureKind m, ScoreKind s) {
  return {m, m == MeasureKind::PhiPr ? std::optional<double>(default_phi(s)) : std::nullopt};
}

MiningConfig config(MeasureKind m, ScoreKind s, int top, double min_sup) {
  MiningConfig cfg;
  cfg.top = top;
  cfg.min_sup = min_sup;
  cfg.measure = measure_for(m, s);
  cfg.score = {s, default_cap_epsilon(m, s)};
  return cfg;
}

const Subgraph& planted_path() {
  static const Subgraph g = Subgraph::from_edges({{0, 1}, {1, 2}, {2, 3}});
  return g;
}

// 1
Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  const int trials = 200;
  auto report = oracle_check(nullptr, trials, 20240601);
  // joint mass of the literal enumeration
  double worst_mass = 0;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Dataset d = random_tiny_dataset(rng());
    const Subgraph g = random_connected_subgraph(d, rng());
    double total = 0;
    for (const auto& row : oracle_joint(g, d))
      for (double c : row) total += c;
    worst_mass = std::max(worst_mass, std::fabs(total - 1));
  }
  const double secs = seconds_since(t0);
  const bool ok = report.matched == trials && worst_mass <= 1e-9 && secs < 60;
  std::string detail = fmt("%d/%d random tiny datasets matched (joint cells + 16 measure/score pairs, tol 1e-9), "
                           "max |mass-1| %.1e, %.2f s",
                           report.matched, trials, worst_mass, secs);
  if (!report.mismatches.empty()) detail += "; first: " + report.mismatches.front();
  return {ok, detail};
}

// 2
Outcome two_atom_example() {
  const ScoreDistribution d{{{0.01, 0.9999}, {kInf, 0.0001}}};
  const double e = measure_exp(d);
  const double p = measure_phi_pr(d, 1.0);
  // same law through a joint: one positive graph holding the feature w.p. 0.0001,
  // one negative never holding it; uncapped FrequencyRatio is +inf at (1, 0)
  const auto joint = joint_distribution(SupportDistribution({0.9999, 0.0001}),
                                        SupportDistribution({1.0, 0.0}));
  const double e_joint = measure_exp(joint, ScoreFunctionSpec{ScoreKind::FrequencyRatio, 0.0});
  const bool ok = e == kInf && p == 0.0001 && e_joint == kInf;
  return {ok, fmt("Exp = %g, phi-Pr(phi=1) = %.17g, Exp via joint = %g", e, p, e_joint)};
}

// 3
Outcome fig2_reproduction() {
  std::ifstream in(UGM_FIXTURE_DIR "/fig2.json");
  std::stringstream ss;
  ss << in.rdbuf();
  const Dataset d = parse_dataset(ss.str());
  const auto cfg = config(MeasureKind::Exp, ScoreKind::Confidence, 1, 0.2);
  const auto mined = mine(d, cfg).features;
  const Subgraph want = Subgraph::from_edges({{0, 1}, {1, 2}});

  // independent scoring of every connected subgraph by world enumeration
  const auto all = all_connected_subgraphs(union_graph(d));
  std::string table;
  const Subgraph* best = nullptr;
  double best_value = -kInf;
  const Subgraph* best_frequent = nullptr;
  double best_frequent_value = -kInf;
  for (const auto& g : all) {
    const double v = oracle_measure(g, d, cfg.measure, cfg.score);
    const double f = expected_frequency(g, d);
    table += fmt(" %s=%.4f", g.to_string().c_str(), v);
    if (v > best_value) best_value = v, best = &g;
    if (f > cfg.min_sup && v > best_frequent_value) best_frequent_value = v, best_frequent = &g;
  }
  const bool ok = mined.size() == 1 && mined[0].subgraph == want && all.size() == 7 &&
                  best && *best == want && best_frequent && *best_frequent == want;
  return {ok, fmt("top-1 %s (Exp-Conf %.6f); oracle over %zu candidates:%s",
                  mined.empty() ? "none" : mined[0].subgraph.to_string().c_str(),
                  mined.empty() ? 0.0 : mined[0].measure_value, all.size(), table.c_str())};
}

// 4
Outcome pruning_soundness() {
  int datasets = 0, configs = 0, mismatches = 0;
  std::uint64_t exp_saved = 0, phi_saved = 0, total_pruned = 0, total_full = 0;
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const Dataset d = small_random_dataset(5000 + seed, 10, 5, 8);
    ++datasets;
    for (auto m : kMeasures)
      for (auto s : kScores)
        for (int top : {1, 3, 8}) {
          auto cfg = config(m, s, top, 0.1);
          const auto pruned = mine(d, cfg);
          const auto full = mine_exhaustive(d, cfg);
          ++configs;
          bool same = pruned.features.size() == full.features.size();
          for (std::size_t i = 0; same && i < full.features.size(); ++i)
            same = pruned.features[i].subgraph == full.features[i].subgraph &&
                   pruned.features[i].measure_value == full.features[i].measure_value;
          if (!same) ++mismatches;
          total_pruned += pruned.stats.visited;
          total_full += full.stats.visited;
          if (m == MeasureKind::Exp || m == MeasureKind::PhiPr) {
            // bound pruning alone, frequency pruning held on in both runs
            auto no_bound = cfg;
            no_bound.pruning.bound = false;
            const auto without = mine(d, no_bound);
            if (pruned.stats.visited < without.stats.visited) {
              (m == MeasureKind::Exp ? exp_saved : phi_saved) +=
                  without.stats.visited - pruned.stats.visited;
            }
          }
        }
  }
  const bool ok = mismatches == 0 && datasets >= 20 && exp_saved > 0 && phi_saved > 0;
  return {ok, fmt("%d datasets x %d configs each: %d mismatches vs exhaustive; "
                  "visited %llu pruned vs %llu exhaustive; bound pruning saved %llu (Exp) and %llu (phi-Pr) visits",
                  datasets, configs / datasets, mismatches,
                  static_cast<unsigned long long>(total_pruned),
                  static_cast<unsigned long long>(total_full),
                  static_cast<unsigned long long>(exp_saved),
                  static_cast<unsigned long long>(phi_saved))};
}

// 5
Outcome bound_validity() {
  std::size_t pairs = 0, violations = 0, freq_violations = 0;
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Dataset d = small_random_dataset(7000 + seed, 6, 5, 7);
    const auto subs = all_connected_subgraphs(union_graph(d));
    std::vector<JointSupportDistribution> joints;
    std::vector<double> freq;
    for (const auto& g : subs) {
      joints.push_back(joint_distribution(g, d));
      freq.push_back(expected_frequency(g, d));
    }
    for (auto s : kScores)
      for (double eps : {0.0, 0.01}) {
        const ScoreFunctionSpec spec{s, eps};
        const auto scores = score_table(spec, d.n_pos(), d.n_neg());
        const auto env = envelope_table(spec, d.n_pos(), d.n_neg());
        const double phi = default_phi(s);
        for (std::size_t i = 0; i < subs.size(); ++i) {
          const double ube = ub_exp(joints[i], env);
          const double ubp = ub_phi_pr(joints[i], env, phi);
          for (std::size_t j = 0; j < subs.size(); ++j) {
            if (subs[j].size() < subs[i].size()) continue;
            if (!std::includes(subs[j].edges().begin(), subs[j].edges().end(),
                               subs[i].edges().begin(), subs[i].edges().end()))
              continue;
            ++pairs;
            const double e = measure_exp(joints[j], scores);
            const double p = measure_phi_pr(joints[j], scores, phi);
            if (!(ube >= e - 1e-9)) ++violations;
            if (!(ubp >= p - 1e-9)) ++violations;
            if (std::isfinite(ube) && std::isfinite(e)) worst = std::max(worst, e - ube);
            worst = std::max(worst, p - ubp);
            if (eps == 0.0 && s == ScoreKind::Confidence && !(freq[i] >= freq[j] - 1e-12))
              ++freq_violations;
          }
        }
      }
  }
  const bool ok = pairs > 1000 && violations == 0 && freq_violations == 0;
  return {ok, fmt("%zu (subgraph, supergraph, score, cap) cases: %zu bound violations, "
                  "%zu Exp-Freq violations, max excess %.2e",
                  pairs, violations, freq_violations, worst)};
}

// 6
Outcome normalization_and_complexity() {
  double worst = 0;
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Dataset d = small_random_dataset(9000 + seed, 14, 6, 10);
    for (const auto& g : all_connected_subgraphs(union_graph(d), 3)) {
      std::vector<double> qp, qn;
      for (std::size_t i = 0; i < d.size(); ++i)
        (d.label(i) == Label::Positive ? qp : qn).push_back(containment_probability(g, d.graph(i)));
      const auto pos = support_distribution(qp);
      const auto neg = support_distribution(qn);
      const auto joint = joint_distribution(pos, neg);
      worst = std::max({worst, std::fabs(pos.total() - 1), std::fabs(neg.total() - 1),
                        std::fabs(joint.total() - 1)});
      for (auto s : kScores)
        worst = std::max(worst, std::fabs(score_distribution(joint, ScoreFunctionSpec{s, 0}).total() - 1));
      ++checked;
    }
  }
  // multiply-add instrumentation, dense containment vectors
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool ops_ok = true;
  std::string ops;
  for (std::size_t m : {1, 2, 10, 50, 200, 1000}) {
    std::vector<double> q(m);
    for (auto& x : q) x = u(rng);
    std::uint64_t count = 0;
    const auto dist = support_distribution(q, &count);
    ops_ok = ops_ok && count <= m * (m + 1) && std::fabs(dist.total() - 1) <= 1e-9;
    worst = std::max(worst, std::fabs(dist.total() - 1));
    ops += fmt(" m=%zu:%llu<=%zu", m, static_cast<unsigned long long>(count), m * (m + 1));
  }
  const bool ok = worst <= 1e-9 && ops_ok && checked > 0;
  return {ok, fmt("%zu subgraphs (support, joint, 4 score distributions): max |sum-1| %.1e; "
                  "multiply-adds%s",
                  checked, worst, ops.c_str())};
}

// 7
Outcome planted_signal() {
  const int seeds = 50;
  int med_conf_hits = 0, phi_ratio_hits = 0, both = 0;
  const auto med_conf = config(MeasureKind::Median, ScoreKind::Confidence, 10, 0.2);
  const auto phi_ratio = config(MeasureKind::PhiPr, ScoreKind::FrequencyRatio, 10, 0.2);
  auto contains_planted = [](const std::vector<MinedFeature>& fs) {
    return std::any_of(fs.begin(), fs.end(),
                       [](const MinedFeature& f) { return f.subgraph == planted_path(); });
  };
  for (int s = 0; s < seeds; ++s) {
    const Dataset d = generate(*preset_config("adhd-like", 1000 + s));
    const bool a = contains_planted(mine(d, med_conf).features);
    const bool b = contains_planted(mine(d, phi_ratio).features);
    med_conf_hits += a;
    phi_ratio_hits += b;
    both += a && b;
  }

  const auto eval_cfg = config(MeasureKind::PhiPr, ScoreKind::FrequencyRatio, 100, 0.2);
  SynthConfig signal = *preset_config("adhd-like", 77);
  SynthConfig control = signal;
  control.planted_prob_pos = control.planted_prob_neg = 0.5;
  const auto with_signal = evaluate(generate(signal), eval_cfg, 20, 0.8, 3);
  const auto no_signal = evaluate(generate(control), eval_cfg, 20, 0.8, 3);

  const bool ok = both >= 45 && with_signal.mean_error < 0.2 &&
                  std::fabs(no_signal.mean_error - 0.5) <= 0.15;
  return {ok, fmt("planted path in top-10: Med-Conf %d/%d, phi-Pr-Ratio %d/%d, both %d/%d; "
                  "evaluate (20 splits): error %.3f +- %.3f (F1 %.3f) planted vs %.3f +- %.3f control",
                  med_conf_hits, seeds, phi_ratio_hits, seeds, both, seeds, with_signal.mean_error,
                  with_signal.std_error, with_signal.mean_f1, no_signal.mean_error,
                  no_signal.std_error)};
}

// 8
Outcome performance_and_scaling() {
  const auto cfg = config(MeasureKind::PhiPr, ScoreKind::FrequencyRatio, 100, 0.2);
  const Dataset full = generate(*preset_config("adhd-like", 8));
  const auto t0 = Clock::now();
  const auto result = mine(full, cfg);
  const double full_secs = seconds_since(t0);

  // best of several runs per size
  auto timed = [&](std::size_t per_class) {
    SynthConfig c = *preset_config("adhd-like", 8);
    c.n_pos = c.n_neg = per_class;
    const Dataset d = generate(c);
    double best = 1e300;
    for (int r = 0; r < 7; ++r) {
      const auto s = Clock::now();
      mine(d, cfg);
      best = std::min(best, seconds_since(s));
    }
    return best;
  };
  const double t50 = timed(25), t100 = timed(50), t200 = timed(100);
  const double exponent = std::log(t200 / t50) / std::log(4.0);
  const bool ok = full_secs < 300 && !result.features.empty() && exponent < 2.0 &&
                  t200 / t100 < 4.0;
  return {ok, fmt("adhd-like (200 graphs) mined in %.3f s, %zu features, %llu nodes visited; "
                  "best-of-7 wall time 50/100/200 graphs: %.4f/%.4f/%.4f s, fitted exponent %.2f",
                  full_secs, result.features.size(),
                  static_cast<unsigned long long>(result.stats.visited), t50, t100, t200, exponent)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"oracle equivalence", oracle_equivalence},
      {"two-atom example", two_atom_example},
      {"four-graph example top feature", fig2_reproduction},
      {"pruning soundness", pruning_soundness},
      {"bound validity", bound_validity},
      {"normalization and DP cost", normalization_and_complexity},
      {"planted-signal recovery", planted_signal},
      {"desk-scale performance", performance_and_scaling},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed ? 1 : 0;
}
