#pragma once

// Exact support and score distributions over the possible worlds of an
// uncertain dataset, and the statistical measures built on them.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ugmine/graph.hpp"
#include "ugmine/scores.hpp"

namespace ugmine {

/// Entry i is the probability that exactly i graphs of the list contain the
/// feature.
class SupportDistribution {
 public:
  SupportDistribution() : probs_{1.0} {}
  explicit SupportDistribution(std::vector<double> probs);

  /// Number of graphs the distribution is over.
  std::size_t num_graphs() const { return probs_.size() - 1; }
  std::span<const double> probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

  /// Largest i with nonzero probability; cells above it are exactly zero.
  std::size_t max_support() const { return max_support_; }

  double total() const;
  double mean() const;

 private:
  std::vector<double> probs_;
  std::size_t max_support_ = 0;
};

/// Poisson-binomial dynamic program over per-graph containment probabilities:
///   P_k[i] = (1 - q_k) P_{k-1}[i] + q_k P_{k-1}[i-1],  P_0[0] = 1.
/// Graphs with q_k = 0 leave the distribution unchanged and cost nothing.
/// If `multiply_adds` is given, it is incremented by the number of products
/// performed (at most m(m+1) for m graphs).
SupportDistribution support_distribution(std::span<const double> containment,
                                         std::uint64_t* multiply_adds = nullptr);

/// Same, computing containment of g in each listed graph first.
SupportDistribution support_distribution(const Subgraph& g,
                                         std::span<const UncertainGraph> graphs,
                                         std::uint64_t* multiply_adds = nullptr);

/// Pr[a, b] = Pr_pos[a] * Pr_neg[b]; positive and negative graphs are
/// independent. Stored as its two marginals, cells computed on access.
class JointSupportDistribution {
 public:
  JointSupportDistribution() = default;
  JointSupportDistribution(SupportDistribution pos, SupportDistribution neg)
      : pos_(std::move(pos)), neg_(std::move(neg)) {}

  std::size_t n_pos() const { return pos_.num_graphs(); }
  std::size_t n_neg() const { return neg_.num_graphs(); }
  const SupportDistribution& pos() const { return pos_; }
  const SupportDistribution& neg() const { return neg_; }

  double cell(std::size_t a, std::size_t b) const { return pos_[a] * neg_[b]; }

  /// Cells with a > pos().max_support() or b > neg().max_support() are zero.
  std::size_t row_extent() const { return pos_.max_support() + 1; }
  std::size_t col_extent() const { return neg_.max_support() + 1; }

  double total() const;
  std::vector<std::vector<double>> matrix() const;

 private:
  SupportDistribution pos_;
  SupportDistribution neg_;
};

JointSupportDistribution joint_distribution(SupportDistribution pos,
                                            SupportDistribution neg);

/// Joint support distribution of g over a dataset's two classes.
JointSupportDistribution joint_distribution(const Subgraph& g,
                                            const Dataset& dataset,
                                            std::uint64_t* multiply_adds = nullptr);

struct ScoreAtom {
  ExtendedScore score;
  double prob;
};

/// Grouped (score, probability) atoms, strictly increasing in score.
struct ScoreDistribution {
  std::vector<ScoreAtom> atoms;
  double total() const;
};

/// Grouping key: scores equal to 12 significant decimal digits share a group.
/// Infinities map to themselves.
double score_group_key(ExtendedScore s);

/// Groups a list of (score, probability) pairs into a ScoreDistribution.
/// Zero-probability pairs are dropped. Each atom's score is the smallest exact
/// score in its group.
ScoreDistribution group_scores(std::vector<ScoreAtom> pairs);

ScoreDistribution score_distribution(const JointSupportDistribution& joint,
                                     const ScoreTable& scores);
ScoreDistribution score_distribution(const JointSupportDistribution& joint,
                                     const ScoreFunctionSpec& spec);

enum class MeasureKind { Exp, Median, Mode, PhiPr };

struct MeasureSpec {
  MeasureKind kind = MeasureKind::PhiPr;
  std::optional<ExtendedScore> phi;  // present exactly for PhiPr

  /// Throws ContractError when phi presence does not match the kind.
  void validate() const;
};

/// CLI names: exp, median, mode, phi-pr.
std::optional<MeasureKind> parse_measure_kind(std::string_view name);
std::string_view measure_kind_name(MeasureKind kind);

/// Default phi per score function: hsic 0.03, gtest 200, ratio 1, conf 0.5.
ExtendedScore default_phi(ScoreKind kind);

/// Default cap: 0.01 when averaging scores that can be infinite, else off.
double default_cap_epsilon(MeasureKind measure, ScoreKind score);

/// Median and Mode compare probabilities with this slack so that results do
/// not flip on last-bit rounding differences.
inline constexpr double kProbabilityTolerance = 1e-12;

/// Expectation; +inf if any positive-probability cell scores +inf.
ExtendedScore measure_exp(const JointSupportDistribution& joint,
                          const ScoreTable& scores);
ExtendedScore measure_exp(const JointSupportDistribution& joint,
                          const ScoreFunctionSpec& spec);
ExtendedScore measure_exp(const ScoreDistribution& dist);

/// Largest atom score S with CDF(S) <= 1/2; the smallest atom if none.
ExtendedScore measure_median(const ScoreDistribution& dist);

/// Most probable atom; ties go to the smaller score.
ExtendedScore measure_mode(const ScoreDistribution& dist);

/// Pr[score >= phi].
double measure_phi_pr(const JointSupportDistribution& joint,
                      const ScoreTable& scores, ExtendedScore phi);
double measure_phi_pr(const JointSupportDistribution& joint,
                      const ScoreFunctionSpec& spec, ExtendedScore phi);
double measure_phi_pr(const ScoreDistribution& dist, ExtendedScore phi);

/// Dispatches on measure.kind.
ExtendedScore evaluate_measure(const JointSupportDistribution& joint,
                               const ScoreTable& scores,
                               const MeasureSpec& measure);

/// Mean containment probability over all graphs of the dataset.
double expected_frequency(const Subgraph& g, const Dataset& dataset);

/// Sum of Pr[a,b] * envelope(a,b): bounds Exp of g and all its supergraphs.
ExtendedScore ub_exp(const JointSupportDistribution& joint,
                     const ScoreTable& envelope);

/// Sum of Pr[a,b] * [envelope(a,b) >= phi]: bounds phi-Pr of g and all its
/// supergraphs.
double ub_phi_pr(const JointSupportDistribution& joint,
                 const ScoreTable& envelope, ExtendedScore phi);

}  // namespace ugmine
