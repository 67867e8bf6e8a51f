#include "ugmine/featurize.hpp"

#include <cmath>
#include <sstream>

#include "ugmine/error.hpp"

namespace ugmine {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
                             std::vector<Label> labels)
    : rows_(rows), cols_(cols), values_(std::move(values)), labels_(std::move(labels)) {
  if (values_.size() != rows_ * cols_) throw ContractError("feature matrix shape mismatch");
  if (labels_.size() != rows_) throw ContractError("feature matrix label count mismatch");
}

FeatureMatrix featurize(const Dataset& dataset, std::span<const Subgraph> features) {
  if (features.empty()) throw ContractError("featurize needs at least one feature");
  for (const auto& f : features)
    for (const auto& e : f.edges())
      if (e.v >= dataset.num_nodes())
        throw ContractError("feature " + f.to_string() + " uses a node outside the " +
                            std::to_string(dataset.num_nodes()) + "-node universe");
  std::vector<double> values;
  values.reserve(dataset.size() * features.size());
  for (const auto& G : dataset.graphs())
    for (const auto& f : features) values.push_back(containment_probability(f, G));
  return FeatureMatrix(dataset.size(), features.size(), std::move(values),
                       std::vector<Label>(dataset.labels().begin(), dataset.labels().end()));
}

std::string export_csv(const FeatureMatrix& m) {
  std::ostringstream os;
  for (std::size_t k = 0; k < m.cols(); ++k) os << "g_" << k << ',';
  os << "label\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) os << format_real(m(i, k)) << ',';
    os << (m.labels()[i] == Label::Positive ? "1" : "-1") << '\n';
  }
  return os.str();
}

namespace {
double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}
}  // namespace

void LogisticRegression::fit(const FeatureMatrix& x) {
  const std::size_t n = x.rows(), d = x.cols();
  weights_.assign(d, 0.0);
  bias_ = 0.0;
  iterations_ = 0;
  if (n == 0) return;
  std::vector<double> grad(d);
  for (int it = 0; it < options_.max_iterations; ++it) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_bias = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = x.row(i);
      const double y = x.labels()[i] == Label::Positive ? 1.0 : 0.0;
      const double r = probability(row) - y;
      for (std::size_t k = 0; k < d; ++k) grad[k] += r * row[k];
      grad_bias += r;
    }
    double max_abs = std::fabs(grad_bias / static_cast<double>(n));
    for (std::size_t k = 0; k < d; ++k) {
      grad[k] = grad[k] / static_cast<double>(n) + options_.lambda * weights_[k];
      max_abs = std::max(max_abs, std::fabs(grad[k]));
    }
    iterations_ = it + 1;
    if (max_abs < options_.tolerance) break;
    for (std::size_t k = 0; k < d; ++k) weights_[k] -= options_.learning_rate * grad[k];
    bias_ -= options_.learning_rate * grad_bias / static_cast<double>(n);
  }
}

double LogisticRegression::probability(std::span<const double> row) const {
  double z = bias_;
  for (std::size_t k = 0; k < weights_.size() && k < row.size(); ++k) z += weights_[k] * row[k];
  return sigmoid(z);
}

Label LogisticRegression::predict(std::span<const double> row) const {
  return probability(row) >= 0.5 ? Label::Positive : Label::Negative;
}

}  // namespace ugmine
