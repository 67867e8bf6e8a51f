// ugmine command-line tool. Talks to the library through the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ugmine/ugmine.h"

namespace {

constexpr int kUsage = 2;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& msg) { throw Failure{kUsage, msg}; }

void check(ugm_status st) {
  if (st == UGM_OK) return;
  throw Failure{1, ugm_last_error()};
}

struct DatasetDel {
  void operator()(ugm_dataset* d) const { ugm_dataset_free(d); }
};
struct FeaturesDel {
  void operator()(ugm_features* f) const { ugm_features_free(f); }
};
struct StringDel {
  void operator()(char* s) const { ugm_string_free(s); }
};
using DatasetPtr = std::unique_ptr<ugm_dataset, DatasetDel>;
using FeaturesPtr = std::unique_ptr<ugm_features, FeaturesDel>;
using StringPtr = std::unique_ptr<char, StringDel>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{1, "cannot write " + path};
}

DatasetPtr load_input(const std::string& path) {
  const std::string text = read_file(path);
  ugm_dataset* d = nullptr;
  ugm_status st = ugm_dataset_parse(text.data(), text.size(), &d);
  if (st == UGM_ERR_PARSE) throw Failure{1, path + ": " + ugm_last_error()};
  check(st);
  return DatasetPtr(d);
}

// Mining flags shared by `mine` and `evaluate`.
struct MiningFlags {
  std::string measure = "phi-pr";
  std::string score = "ratio";
  int top = 100;
  double min_sup = 0.2;
  std::optional<double> phi;
  std::optional<double> cap_epsilon;
  int max_edges = 0;
  bool no_prune = false;
  int threads = 1;

  void add_to(CLI::App& app) {
    app.add_option("--measure", measure, "exp|median|mode|phi-pr")->capture_default_str();
    app.add_option("--score", score, "conf|ratio|gtest|hsic")->capture_default_str();
    app.add_option("--top", top, "number of features")->capture_default_str();
    app.add_option("--min-sup", min_sup, "expected-frequency threshold")->capture_default_str();
    app.add_option("--phi", phi, "phi-pr threshold (default depends on --score)");
    app.add_option("--cap-epsilon", cap_epsilon, "score cap 1/eps, 0 disables");
    app.add_option("--max-edges", max_edges, "largest feature size, 0 = unlimited");
    app.add_flag("--no-prune", no_prune, "disable frequency and bound pruning");
    app.add_option("--threads", threads, "worker threads")->capture_default_str();
  }

  ugm_mining_config resolve() const {
    ugm_mining_config cfg;
    ugm_mining_config_init(&cfg);
    if (ugm_measure_from_name(measure.c_str(), &cfg.measure) != UGM_OK)
      usage_error("unknown --measure " + measure);
    if (ugm_score_from_name(score.c_str(), &cfg.score) != UGM_OK)
      usage_error("unknown --score " + score);
    if (phi && cfg.measure != UGM_MEASURE_PHI_PR)
      usage_error("--phi only applies to --measure phi-pr");
    if (top < 1) usage_error("--top must be >= 1");
    if (threads < 1) usage_error("--threads must be >= 1");
    if (max_edges < 0) usage_error("--max-edges must be >= 0");
    cfg.top = top;
    cfg.min_sup = min_sup;
    cfg.has_phi = cfg.measure == UGM_MEASURE_PHI_PR;
    cfg.phi = phi.value_or(ugm_default_phi(cfg.score));
    cfg.cap_epsilon = cap_epsilon.value_or(ugm_default_cap_epsilon(cfg.measure, cfg.score));
    cfg.max_edges = max_edges;
    cfg.prune = no_prune ? 0 : 1;
    cfg.threads = threads;
    return cfg;
  }
};

std::string feature_table(const ugm_features* f) {
  std::ostringstream os;
  char line[128];
  std::snprintf(line, sizeof line, "%-5s %-14s %-10s %s\n", "rank", "measure", "exp_freq", "edges");
  os << line;
  for (size_t i = 0; i < ugm_features_count(f); ++i) {
    std::vector<uint32_t> e(2 * ugm_feature_num_edges(f, i));
    check(ugm_feature_edges(f, i, e.data()));
    std::snprintf(line, sizeof line, "%-5zu %-14.6g %-10.6g ", i + 1, ugm_feature_measure(f, i),
                  ugm_feature_exp_freq(f, i));
    os << line;
    for (size_t k = 0; k < e.size(); k += 2) os << (k ? " " : "") << e[k] << '-' << e[k + 1];
    os << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Top-t discriminative subgraph mining over uncertain graphs"};
  app.require_subcommand(1, 1);

  std::string input, out, preset, features_path;
  std::uint64_t seed = 0;

  MiningFlags mine_flags;
  auto* mine = app.add_subcommand("mine", "mine top-t subgraph features");
  mine->add_option("--input", input, "dataset JSON")->required();
  mine->add_option("--out", out, "feature list JSON (stdout when omitted)");
  mine->add_option("--seed", seed, "unused; accepted for uniformity");
  mine_flags.add_to(*mine);

  int trials = 100;
  auto* oracle = app.add_subcommand("oracle-check", "compare DP against possible-world enumeration");
  oracle->add_option("--input", input, "tiny dataset JSON (random tiny datasets when omitted)");
  oracle->add_option("--trials", trials, "number of comparisons")->capture_default_str();
  oracle->add_option("--seed", seed, "random seed")->capture_default_str();

  std::optional<std::size_t> n_pos, n_neg;
  std::optional<double> planted_pos, planted_neg;
  auto* gen = app.add_subcommand("gen", "write a synthetic dataset");
  gen->add_option("--preset", preset, "fig2|adhd-like|adni-like|hiv-like")->required();
  gen->add_option("--seed", seed, "random seed")->capture_default_str();
  gen->add_option("--n-pos", n_pos, "override positive graph count");
  gen->add_option("--n-neg", n_neg, "override negative graph count");
  gen->add_option("--planted-pos", planted_pos, "planted edge probability in positives");
  gen->add_option("--planted-neg", planted_neg, "planted edge probability in negatives");
  gen->add_option("--out", out, "output path (stdout when omitted)");

  auto* feat = app.add_subcommand("featurize", "containment-probability feature matrix as CSV");
  feat->add_option("--input", input, "dataset JSON")->required();
  feat->add_option("--features", features_path, "feature list JSON from mine")->required();
  feat->add_option("--out", out, "CSV path (stdout when omitted)");

  MiningFlags eval_flags;
  int repeats = 20;
  double train_fraction = 0.8;
  auto* eval = app.add_subcommand("evaluate", "repeated train/test classification");
  eval->add_option("--input", input, "dataset JSON")->required();
  eval->add_option("--repeats", repeats, "number of splits")->capture_default_str();
  eval->add_option("--train-fraction", train_fraction, "training share per class")
      ->capture_default_str();
  eval->add_option("--seed", seed, "random seed")->capture_default_str();
  eval->add_option("--out", out, "report JSON (stdout when omitted)");
  eval_flags.add_to(*eval);

  auto* stats = app.add_subcommand("stats", "dataset summary");
  stats->add_option("--input", input, "dataset JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*mine) {
      const ugm_mining_config cfg = mine_flags.resolve();
      DatasetPtr d = load_input(input);
      ugm_features* raw = nullptr;
      check(ugm_mine(d.get(), &cfg, &raw));
      FeaturesPtr f(raw);
      char* json = nullptr;
      check(ugm_features_to_json(f.get(), &json));
      StringPtr json_owner(json);
      const std::string table = feature_table(f.get());
      if (out.empty()) {
        std::cout << json;
        std::cerr << table;
      } else {
        write_output(out, json);
        std::cout << table;
      }
    } else if (*oracle) {
      if (trials < 1) usage_error("--trials must be >= 1");
      DatasetPtr d;
      if (!input.empty()) d = load_input(input);
      ugm_oracle_report r{};
      char* first = nullptr;
      check(ugm_oracle_check(d.get(), trials, seed, &r, &first));
      StringPtr first_owner(first);
      std::cout << r.matched << '/' << r.trials << " matched\n";
      if (r.matched != r.trials) {
        std::cerr << "first mismatch: " << first << '\n';
        return 1;
      }
    } else if (*gen) {
      ugm_dataset* raw = nullptr;
      if (preset == "fig2") {
        if (n_pos || n_neg || planted_pos || planted_neg)
          usage_error("the fig2 preset takes no overrides");
        check(ugm_dataset_preset("fig2", seed, &raw));
      } else {
        ugm_synth_config cfg;
        if (ugm_synth_config_preset(preset.c_str(), seed, &cfg) != UGM_OK)
          usage_error("unknown --preset " + preset);
        if (n_pos) cfg.n_pos = *n_pos;
        if (n_neg) cfg.n_neg = *n_neg;
        if (planted_pos) cfg.planted_prob_pos = *planted_pos;
        if (planted_neg) cfg.planted_prob_neg = *planted_neg;
        check(ugm_dataset_generate(&cfg, &raw));
      }
      DatasetPtr d(raw);
      char* text = nullptr;
      check(ugm_dataset_serialize(d.get(), &text));
      StringPtr owner(text);
      write_output(out, text);
    } else if (*feat) {
      DatasetPtr d = load_input(input);
      const std::string text = read_file(features_path);
      ugm_features* raw = nullptr;
      check(ugm_features_parse(text.data(), text.size(), &raw));
      FeaturesPtr f(raw);
      char* csv = nullptr;
      check(ugm_featurize_csv(d.get(), f.get(), &csv));
      StringPtr owner(csv);
      write_output(out, csv);
    } else if (*eval) {
      const ugm_mining_config cfg = eval_flags.resolve();
      if (repeats < 1) usage_error("--repeats must be >= 1");
      DatasetPtr d = load_input(input);
      char* json = nullptr;
      check(ugm_evaluate(d.get(), &cfg, repeats, train_fraction, seed, &json));
      StringPtr owner(json);
      write_output(out, json);
    } else if (*stats) {
      DatasetPtr d = load_input(input);
      ugm_dataset_stats s;
      check(ugm_dataset_stats_get(d.get(), &s));
      std::printf("graphs %zu (pos %zu, neg %zu)\nnodes %zu\nmean edges %.4f\nmean edge prob %.4f\n",
                  s.num_graphs, s.n_pos, s.n_neg, s.num_nodes, s.mean_edges, s.mean_edge_prob);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return 0;
}
