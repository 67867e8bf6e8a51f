#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "ugmine/error.hpp"
#include "ugmine/featurize.hpp"

namespace ugmine {

namespace {

void mean_std(const std::vector<double>& xs, double& mean, double& sd) {
  mean = sd = 0.0;
  if (xs.empty()) return;
  mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() < 2) return;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

// Stratified split of one class: shuffled, at least one graph on each side
// when the class has two or more graphs.
void split_class(std::span<const std::size_t> members, double train_fraction,
                 std::mt19937_64& rng, std::vector<std::size_t>& train,
                 std::vector<std::size_t>& test) {
  std::vector<std::size_t> order(members.begin(), members.end());
  std::shuffle(order.begin(), order.end(), rng);
  auto n = order.size();
  auto k = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
  k = std::clamp<std::size_t>(k, 1, n > 1 ? n - 1 : n);
  train.insert(train.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  test.insert(test.end(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end());
}

}  // namespace

std::string EvalReport::to_json() const {
  std::ostringstream os;
  auto list = [&](const auto& xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) os << ", ";
      if constexpr (std::is_floating_point_v<typename std::decay_t<decltype(xs)>::value_type>)
        os << format_real(xs[i]);
      else
        os << xs[i];
    }
    os << ']';
  };
  os << "{\"repeats\": " << error_rates.size() << ", \"error_rates\": ";
  list(error_rates);
  os << ", \"f1_scores\": ";
  list(f1_scores);
  os << ", \"feature_counts\": ";
  list(feature_counts);
  os << ", \"mean_error\": " << format_real(mean_error)
     << ", \"std_error\": " << format_real(std_error)
     << ", \"mean_f1\": " << format_real(mean_f1)
     << ", \"std_f1\": " << format_real(std_f1) << "}\n";
  return os.str();
}

EvalReport evaluate(const Dataset& dataset, const MiningConfig& cfg, int repeats,
                    double train_fraction, std::uint64_t seed, const EvalHooks* hooks) {
  dataset.require_both_classes();
  cfg.validate();
  if (repeats < 1) throw ContractError("repeats must be >= 1");
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw ContractError("train_fraction must lie in (0,1)");

  EvalReport report;
  for (int r = 0; r < repeats; ++r) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(r));
    std::vector<std::size_t> train_idx, test_idx;
    split_class(dataset.positive_indices(), train_fraction, rng, train_idx, test_idx);
    split_class(dataset.negative_indices(), train_fraction, rng, train_idx, test_idx);
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());
    const Dataset train = dataset.subset(train_idx);
    const Dataset test = dataset.subset(test_idx);
    if (hooks && hooks->on_split) hooks->on_split(train, test);

    const MiningResult mined = mine(train, cfg, hooks ? hooks->miner_observer : nullptr);
    std::vector<Subgraph> features;
    for (const auto& f : mined.features) features.push_back(f.subgraph);

    auto matrix_for = [&](const Dataset& d) {
      if (features.empty())
        return FeatureMatrix(d.size(), 0, {},
                             std::vector<Label>(d.labels().begin(), d.labels().end()));
      return featurize(d, features);
    };
    const FeatureMatrix x_train = matrix_for(train);
    const FeatureMatrix x_test = matrix_for(test);

    LogisticRegression clf;
    clf.fit(x_train);
    std::size_t tp = 0, fp = 0, fn = 0, wrong = 0;
    for (std::size_t i = 0; i < x_test.rows(); ++i) {
      const Label pred = clf.predict(x_test.row(i));
      const Label truth = x_test.labels()[i];
      if (pred != truth) ++wrong;
      if (pred == Label::Positive && truth == Label::Positive) ++tp;
      if (pred == Label::Positive && truth == Label::Negative) ++fp;
      if (pred == Label::Negative && truth == Label::Positive) ++fn;
    }
    const double denom = static_cast<double>(2 * tp + fp + fn);
    report.error_rates.push_back(x_test.rows() ? static_cast<double>(wrong) /
                                                     static_cast<double>(x_test.rows())
                                               : 0.0);
    report.f1_scores.push_back(denom > 0 ? 2.0 * static_cast<double>(tp) / denom : 0.0);
    report.feature_counts.push_back(features.size());
  }
  mean_std(report.error_rates, report.mean_error, report.std_error);
  mean_std(report.f1_scores, report.mean_f1, report.std_f1);
  return report;
}

}  // namespace ugmine
