/* ugmine C API.
 *
 * Opaque handles, status codes, and a thread-local message for the last
 * failure. Strings returned through char** out-parameters are owned by the
 * caller and released with ugm_string_free.
 */
#ifndef UGMINE_H
#define UGMINE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef UGM_BUILDING_LIBRARY
#    define UGM_API __declspec(dllexport)
#  else
#    define UGM_API __declspec(dllimport)
#  endif
#else
#  define UGM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ugm_status {
  UGM_OK = 0,
  UGM_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad enum, bad index */
  UGM_ERR_PARSE = 2,            /* malformed dataset / feature file */
  UGM_ERR_IO = 3,
  UGM_ERR_CONTRACT = 4,         /* precondition violated */
  UGM_ERR_BUDGET = 5,           /* possible-world budget exceeded */
  UGM_ERR_INTERNAL = 6
} ugm_status;

typedef enum ugm_measure { UGM_MEASURE_EXP, UGM_MEASURE_MEDIAN, UGM_MEASURE_MODE, UGM_MEASURE_PHI_PR } ugm_measure;
typedef enum ugm_score { UGM_SCORE_CONF, UGM_SCORE_RATIO, UGM_SCORE_GTEST, UGM_SCORE_HSIC } ugm_score;

typedef struct ugm_dataset ugm_dataset;
typedef struct ugm_features ugm_features;

/* Message of the last failing call on this thread ("" if none). */
UGM_API const char* ugm_last_error(void);
UGM_API void ugm_string_free(char* s);
UGM_API const char* ugm_version(void);

/* ---- datasets ---- */
UGM_API ugm_status ugm_dataset_parse(const char* json, size_t len, ugm_dataset** out);
UGM_API ugm_status ugm_dataset_load(const char* path, ugm_dataset** out);
/* "fig2", "adhd-like", "adni-like", "hiv-like" */
UGM_API ugm_status ugm_dataset_preset(const char* name, uint64_t seed, ugm_dataset** out);
UGM_API void ugm_dataset_free(ugm_dataset* d);
UGM_API ugm_status ugm_dataset_serialize(const ugm_dataset* d, char** out);
UGM_API ugm_status ugm_dataset_save(const ugm_dataset* d, const char* path);

typedef struct ugm_synth_config {
  uint64_t seed;
  size_t n_pos, n_neg;
  size_t num_nodes;
  size_t background_edges_per_graph;
  double background_prob_lo, background_prob_hi;
  const uint32_t* planted; /* 2 * num_planted node ids */
  size_t num_planted;
  double planted_prob_pos, planted_prob_neg;
} ugm_synth_config;

/* Parameters of a random preset ("adhd-like" etc.). planted points at
 * thread-local storage valid until the next call on this thread. */
UGM_API ugm_status ugm_synth_config_preset(const char* name, uint64_t seed, ugm_synth_config* out);
UGM_API ugm_status ugm_dataset_generate(const ugm_synth_config* cfg, ugm_dataset** out);

typedef struct ugm_dataset_stats {
  int empty;
  size_t num_graphs, n_pos, n_neg, num_nodes;
  double mean_edges, mean_edge_prob;
} ugm_dataset_stats;

UGM_API ugm_status ugm_dataset_stats_get(const ugm_dataset* d, ugm_dataset_stats* out);

/* ---- mining ---- */
typedef struct ugm_mining_config {
  int top;
  double min_sup;
  ugm_measure measure;
  ugm_score score;
  int has_phi;
  double phi;
  double cap_epsilon;
  int max_edges; /* <= 0: unlimited */
  int prune;     /* 0 disables frequency and bound pruning */
  int threads;
} ugm_mining_config;

/* CLI defaults: phi-pr + ratio, phi 1, top 100, min_sup 0.2, one thread. */
UGM_API void ugm_mining_config_init(ugm_mining_config* cfg);
UGM_API ugm_status ugm_measure_from_name(const char* name, ugm_measure* out);
UGM_API ugm_status ugm_score_from_name(const char* name, ugm_score* out);
UGM_API double ugm_default_phi(ugm_score score);
UGM_API double ugm_default_cap_epsilon(ugm_measure measure, ugm_score score);

typedef struct ugm_mining_stats {
  uint64_t visited, evaluated, frequency_pruned, bound_pruned, admissions;
} ugm_mining_stats;

UGM_API ugm_status ugm_mine(const ugm_dataset* d, const ugm_mining_config* cfg, ugm_features** out);
UGM_API void ugm_features_free(ugm_features* f);
UGM_API size_t ugm_features_count(const ugm_features* f);
UGM_API size_t ugm_feature_num_edges(const ugm_features* f, size_t i);
/* Writes 2 * num_edges node ids. */
UGM_API ugm_status ugm_feature_edges(const ugm_features* f, size_t i, uint32_t* out);
UGM_API double ugm_feature_measure(const ugm_features* f, size_t i);
UGM_API double ugm_feature_exp_freq(const ugm_features* f, size_t i);
UGM_API ugm_status ugm_features_stats(const ugm_features* f, ugm_mining_stats* out);
/* Feature list JSON; the header fields come from the config used to mine. */
UGM_API ugm_status ugm_features_to_json(const ugm_features* f, char** out);
UGM_API ugm_status ugm_features_parse(const char* json, size_t len, ugm_features** out);

/* ---- featurize / evaluate / oracle ---- */
UGM_API ugm_status ugm_featurize_csv(const ugm_dataset* d, const ugm_features* f, char** out);
UGM_API ugm_status ugm_evaluate(const ugm_dataset* d, const ugm_mining_config* cfg, int repeats,
                                double train_fraction, uint64_t seed, char** json_out);

typedef struct ugm_oracle_report {
  int trials;
  int matched;
} ugm_oracle_report;

/* d may be NULL: each trial then draws its own tiny random dataset.
 * first_mismatch (optional) receives the first mismatch description or "". */
UGM_API ugm_status ugm_oracle_check(const ugm_dataset* d, int trials, uint64_t seed,
                                    ugm_oracle_report* out, char** first_mismatch);

#ifdef __cplusplus
}
#endif

#endif
