#pragma once

// Containment-probability feature matrices and a train/test evaluation
// harness with a built-in logistic-regression classifier.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ugmine/graph.hpp"
#include "ugmine/miner.hpp"

namespace ugmine {

/// Entry (i, k) = Pr(feature k is contained in graph i).
class FeatureMatrix {
 public:
  FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
                std::vector<Label> labels);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t k) const { return values_[i * cols_ + k]; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(values_).subspan(i * cols_, cols_);
  }
  std::span<const Label> labels() const { return labels_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
  std::vector<Label> labels_;
};

/// Throws ContractError on an empty feature list or a feature edge outside the
/// dataset's node universe.
FeatureMatrix featurize(const Dataset& dataset, std::span<const Subgraph> features);

/// "g_0,...,g_{m-1},label\n" then one row per graph, shortest round-trip
/// decimals, label as 1/-1.
std::string export_csv(const FeatureMatrix& m);

/// L2-regularized logistic regression trained by full-batch gradient descent.
class LogisticRegression {
 public:
  struct Options {
    double lambda = 0.01;
    double learning_rate = 0.5;
    int max_iterations = 5000;
    double tolerance = 1e-6;  // stop when the gradient's max-norm drops below
  };

  LogisticRegression() : LogisticRegression(Options{}) {}
  explicit LogisticRegression(Options options) : options_(options) {}

  void fit(const FeatureMatrix& x);
  double probability(std::span<const double> row) const;
  Label predict(std::span<const double> row) const;
  int iterations() const { return iterations_; }

 private:
  Options options_;
  std::vector<double> weights_;
  double bias_ = 0.0;
  int iterations_ = 0;
};

struct EvalReport {
  std::vector<double> error_rates;
  std::vector<double> f1_scores;
  std::vector<std::size_t> feature_counts;
  double mean_error = 0.0;
  double std_error = 0.0;
  double mean_f1 = 0.0;
  double std_f1 = 0.0;

  std::string to_json() const;
};

struct EvalHooks {
  /// Called with each repeat's training dataset right before mining.
  std::function<void(const Dataset& train, const Dataset& test)> on_split;
  /// Handed to every mine() call.
  const MiningObserver* miner_observer = nullptr;
};

/// Repeated stratified train/test evaluation: mine on the training graphs
/// only, featurize both parts, fit the classifier, score the test part.
/// Throws ContractError when a class is missing.
EvalReport evaluate(const Dataset& dataset, const MiningConfig& cfg, int repeats,
                    double train_fraction, std::uint64_t seed,
                    const EvalHooks* hooks = nullptr);

}  // namespace ugmine
