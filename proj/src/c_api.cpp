#include "ugmine/ugmine.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "ugmine/error.hpp"
#include "ugmine/featurize.hpp"
#include "ugmine/miner.hpp"
#include "ugmine/oracle.hpp"
#include "ugmine/synthgen.hpp"

struct ugm_dataset {
  ugmine::Dataset data;
};

struct ugm_features {
  std::vector<ugmine::MinedFeature> list;
  ugmine::MiningConfig cfg;
  ugmine::MiningStats stats;
};

namespace {

thread_local std::string g_last_error;

ugm_status fail(ugm_status code, std::string msg) {
  g_last_error = std::move(msg);
  return code;
}

// Runs fn, mapping exceptions onto status codes.
template <class Fn>
ugm_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return UGM_OK;
  } catch (const ugmine::ParseError& e) {
    return fail(UGM_ERR_PARSE, e.what());
  } catch (const ugmine::BudgetError& e) {
    return fail(UGM_ERR_BUDGET, e.what());
  } catch (const ugmine::IoError& e) {
    return fail(UGM_ERR_IO, e.what());
  } catch (const ugmine::ContractError& e) {
    return fail(UGM_ERR_CONTRACT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(UGM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(UGM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(UGM_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool valid_measure(ugm_measure m) { return m >= UGM_MEASURE_EXP && m <= UGM_MEASURE_PHI_PR; }
bool valid_score(ugm_score s) { return s >= UGM_SCORE_CONF && s <= UGM_SCORE_HSIC; }

ugmine::MeasureKind to_measure(ugm_measure m) {
  switch (m) {
    case UGM_MEASURE_EXP: return ugmine::MeasureKind::Exp;
    case UGM_MEASURE_MEDIAN: return ugmine::MeasureKind::Median;
    case UGM_MEASURE_MODE: return ugmine::MeasureKind::Mode;
    default: return ugmine::MeasureKind::PhiPr;
  }
}

ugmine::ScoreKind to_score(ugm_score s) {
  switch (s) {
    case UGM_SCORE_CONF: return ugmine::ScoreKind::Confidence;
    case UGM_SCORE_RATIO: return ugmine::ScoreKind::FrequencyRatio;
    case UGM_SCORE_GTEST: return ugmine::ScoreKind::GTest;
    default: return ugmine::ScoreKind::HsicLinear;
  }
}

ugmine::MiningConfig to_config(const ugm_mining_config& c) {
  if (!valid_measure(c.measure) || !valid_score(c.score))
    throw ugmine::ContractError("unknown measure or score kind");
  ugmine::MiningConfig cfg;
  cfg.top = c.top;
  cfg.min_sup = c.min_sup;
  cfg.measure.kind = to_measure(c.measure);
  cfg.measure.phi.reset();
  if (c.has_phi) cfg.measure.phi = c.phi;
  cfg.score = {to_score(c.score), c.cap_epsilon};
  if (c.max_edges > 0) cfg.max_edges = c.max_edges;
  cfg.pruning.frequency = cfg.pruning.bound = c.prune != 0;
  cfg.threads = c.threads;
  cfg.validate();
  return cfg;
}

}  // namespace

extern "C" {

const char* ugm_last_error(void) { return g_last_error.c_str(); }
void ugm_string_free(char* s) { std::free(s); }
const char* ugm_version(void) { return "0.1.0"; }

ugm_status ugm_dataset_parse(const char* json, size_t len, ugm_dataset** out) {
  if (!json || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ugm_dataset{ugmine::parse_dataset(std::string_view(json, len))};
  });
}

ugm_status ugm_dataset_load(const char* path, ugm_dataset** out) {
  if (!path || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new ugm_dataset{ugmine::load_dataset(path)}; });
}

ugm_status ugm_dataset_preset(const char* name, uint64_t seed, ugm_dataset** out) {
  if (!name || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  auto d = ugmine::make_preset(name, seed);
  if (!d) return fail(UGM_ERR_INVALID_ARGUMENT, std::string("unknown preset: ") + name);
  return guarded([&] { *out = new ugm_dataset{std::move(*d)}; });
}

void ugm_dataset_free(ugm_dataset* d) { delete d; }

ugm_status ugm_dataset_serialize(const ugm_dataset* d, char** out) {
  if (!d || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(ugmine::serialize_dataset(d->data)); });
}

ugm_status ugm_dataset_save(const ugm_dataset* d, const char* path) {
  if (!d || !path) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { ugmine::save_dataset(d->data, path); });
}

ugm_status ugm_synth_config_preset(const char* name, uint64_t seed, ugm_synth_config* out) {
  if (!name || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  auto cfg = ugmine::preset_config(name, seed);
  if (!cfg) return fail(UGM_ERR_INVALID_ARGUMENT, std::string("not a random preset: ") + name);
  thread_local std::vector<uint32_t> planted;
  planted.clear();
  for (const auto& e : cfg->planted) {
    planted.push_back(e.u);
    planted.push_back(e.v);
  }
  *out = ugm_synth_config{cfg->seed,
                          cfg->n_pos,
                          cfg->n_neg,
                          cfg->num_nodes,
                          cfg->background_edges_per_graph,
                          cfg->background_prob_lo,
                          cfg->background_prob_hi,
                          planted.data(),
                          cfg->planted.size(),
                          cfg->planted_prob_pos,
                          cfg->planted_prob_neg};
  g_last_error.clear();
  return UGM_OK;
}

ugm_status ugm_dataset_generate(const ugm_synth_config* c, ugm_dataset** out) {
  if (!c || !out || (c->num_planted && !c->planted))
    return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ugmine::SynthConfig cfg;
    cfg.seed = c->seed;
    cfg.n_pos = c->n_pos;
    cfg.n_neg = c->n_neg;
    cfg.num_nodes = c->num_nodes;
    cfg.background_edges_per_graph = c->background_edges_per_graph;
    cfg.background_prob_lo = c->background_prob_lo;
    cfg.background_prob_hi = c->background_prob_hi;
    for (size_t i = 0; i < c->num_planted; ++i)
      cfg.planted.push_back(ugmine::Edge::make(c->planted[2 * i], c->planted[2 * i + 1]));
    cfg.planted_prob_pos = c->planted_prob_pos;
    cfg.planted_prob_neg = c->planted_prob_neg;
    *out = new ugm_dataset{ugmine::generate(cfg)};
  });
}

ugm_status ugm_dataset_stats_get(const ugm_dataset* d, ugm_dataset_stats* out) {
  if (!d || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto s = ugmine::dataset_stats(d->data);
    *out = ugm_dataset_stats{s.empty ? 1 : 0, s.num_graphs,  s.n_pos,         s.n_neg,
                             s.num_nodes,     s.mean_edges, s.mean_edge_prob};
  });
}

void ugm_mining_config_init(ugm_mining_config* cfg) {
  if (!cfg) return;
  *cfg = ugm_mining_config{100, 0.2, UGM_MEASURE_PHI_PR, UGM_SCORE_RATIO, 1, 1.0, 0.0, 0, 1, 1};
}

ugm_status ugm_measure_from_name(const char* name, ugm_measure* out) {
  if (!name || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  auto k = ugmine::parse_measure_kind(name);
  if (!k) return fail(UGM_ERR_INVALID_ARGUMENT, std::string("unknown measure: ") + name);
  *out = *k == ugmine::MeasureKind::Exp      ? UGM_MEASURE_EXP
         : *k == ugmine::MeasureKind::Median ? UGM_MEASURE_MEDIAN
         : *k == ugmine::MeasureKind::Mode   ? UGM_MEASURE_MODE
                                             : UGM_MEASURE_PHI_PR;
  return UGM_OK;
}

ugm_status ugm_score_from_name(const char* name, ugm_score* out) {
  if (!name || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  auto k = ugmine::parse_score_kind(name);
  if (!k) return fail(UGM_ERR_INVALID_ARGUMENT, std::string("unknown score: ") + name);
  *out = *k == ugmine::ScoreKind::Confidence       ? UGM_SCORE_CONF
         : *k == ugmine::ScoreKind::FrequencyRatio ? UGM_SCORE_RATIO
         : *k == ugmine::ScoreKind::GTest          ? UGM_SCORE_GTEST
                                                   : UGM_SCORE_HSIC;
  return UGM_OK;
}

double ugm_default_phi(ugm_score score) {
  return valid_score(score) ? ugmine::default_phi(to_score(score)) : 0.0;
}

double ugm_default_cap_epsilon(ugm_measure measure, ugm_score score) {
  if (!valid_measure(measure) || !valid_score(score)) return 0.0;
  return ugmine::default_cap_epsilon(to_measure(measure), to_score(score));
}

ugm_status ugm_mine(const ugm_dataset* d, const ugm_mining_config* c, ugm_features** out) {
  if (!d || !c || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto cfg = to_config(*c);
    auto result = ugmine::mine(d->data, cfg);
    *out = new ugm_features{std::move(result.features), cfg, result.stats};
  });
}

void ugm_features_free(ugm_features* f) { delete f; }

size_t ugm_features_count(const ugm_features* f) { return f ? f->list.size() : 0; }

size_t ugm_feature_num_edges(const ugm_features* f, size_t i) {
  return f && i < f->list.size() ? f->list[i].subgraph.size() : 0;
}

ugm_status ugm_feature_edges(const ugm_features* f, size_t i, uint32_t* out) {
  if (!f || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= f->list.size()) return fail(UGM_ERR_INVALID_ARGUMENT, "feature index out of range");
  size_t k = 0;
  for (const auto& e : f->list[i].subgraph.edges()) {
    out[k++] = e.u;
    out[k++] = e.v;
  }
  return UGM_OK;
}

double ugm_feature_measure(const ugm_features* f, size_t i) {
  return f && i < f->list.size() ? f->list[i].measure_value : 0.0;
}

double ugm_feature_exp_freq(const ugm_features* f, size_t i) {
  return f && i < f->list.size() ? f->list[i].exp_freq : 0.0;
}

ugm_status ugm_features_stats(const ugm_features* f, ugm_mining_stats* out) {
  if (!f || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  *out = ugm_mining_stats{f->stats.visited, f->stats.evaluated, f->stats.frequency_pruned,
                          f->stats.bound_pruned, f->stats.admissions};
  return UGM_OK;
}

ugm_status ugm_features_to_json(const ugm_features* f, char** out) {
  if (!f || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(ugmine::features_to_json(f->list, f->cfg)); });
}

ugm_status ugm_features_parse(const char* json, size_t len, ugm_features** out) {
  if (!json || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ugm_features{ugmine::parse_features_json(std::string_view(json, len)), {}, {}};
  });
}

ugm_status ugm_featurize_csv(const ugm_dataset* d, const ugm_features* f, char** out) {
  if (!d || !f || !out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<ugmine::Subgraph> subs;
    for (const auto& x : f->list) subs.push_back(x.subgraph);
    *out = dup_string(ugmine::export_csv(ugmine::featurize(d->data, subs)));
  });
}

ugm_status ugm_evaluate(const ugm_dataset* d, const ugm_mining_config* c, int repeats,
                        double train_fraction, uint64_t seed, char** json_out) {
  if (!d || !c || !json_out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto report = ugmine::evaluate(d->data, to_config(*c), repeats, train_fraction, seed);
    *json_out = dup_string(report.to_json());
  });
}

ugm_status ugm_oracle_check(const ugm_dataset* d, int trials, uint64_t seed,
                            ugm_oracle_report* out, char** first_mismatch) {
  if (!out) return fail(UGM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto r = ugmine::oracle_check(d ? &d->data : nullptr, trials, seed);
    *out = ugm_oracle_report{r.trials, r.matched};
    if (first_mismatch)
      *first_mismatch = dup_string(r.mismatches.empty() ? std::string() : r.mismatches.front());
  });
}

}  // extern "C"
