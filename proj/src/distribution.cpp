#include "ugmine/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "ugmine/error.hpp"

namespace ugmine {

SupportDistribution::SupportDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty())
    throw ContractError("support distribution needs at least one entry");
  max_support_ = 0;
  for (std::size_t i = probs_.size(); i-- > 0;)
    if (probs_[i] != 0.0) {
      max_support_ = i;
      break;
    }
}

double SupportDistribution::total() const {
  double s = 0.0;
  for (double p : probs_) s += p;
  return s;
}

double SupportDistribution::mean() const {
  double s = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) s += static_cast<double>(i) * probs_[i];
  return s;
}

SupportDistribution support_distribution(std::span<const double> containment,
                                         std::uint64_t* multiply_adds) {
  std::vector<double> probs(containment.size() + 1, 0.0);
  probs[0] = 1.0;
  std::size_t k = 0;  // graphs with nonzero containment folded in so far
  std::uint64_t ops = 0;
  for (double q : containment) {
    if (q == 0.0) continue;
    ++k;
    const double miss = 1.0 - q;
    probs[k] = q * probs[k - 1];
    for (std::size_t i = k - 1; i >= 1; --i)
      probs[i] = miss * probs[i] + q * probs[i - 1];
    probs[0] *= miss;
    ops += 2 * k;
  }
  if (multiply_adds) *multiply_adds += ops;
  return SupportDistribution(std::move(probs));
}

SupportDistribution support_distribution(const Subgraph& g,
                                         std::span<const UncertainGraph> graphs,
                                         std::uint64_t* multiply_adds) {
  std::vector<double> q;
  q.reserve(graphs.size());
  for (const auto& G : graphs) q.push_back(containment_probability(g, G));
  return support_distribution(q, multiply_adds);
}

double JointSupportDistribution::total() const {
  double s = 0.0;
  for (std::size_t a = 0; a < row_extent(); ++a)
    for (std::size_t b = 0; b < col_extent(); ++b) s += cell(a, b);
  return s;
}

std::vector<std::vector<double>> JointSupportDistribution::matrix() const {
  std::vector<std::vector<double>> m(n_pos() + 1, std::vector<double>(n_neg() + 1));
  for (std::size_t a = 0; a <= n_pos(); ++a)
    for (std::size_t b = 0; b <= n_neg(); ++b) m[a][b] = cell(a, b);
  return m;
}

JointSupportDistribution joint_distribution(SupportDistribution pos,
                                            SupportDistribution neg) {
  return JointSupportDistribution(std::move(pos), std::move(neg));
}

JointSupportDistribution joint_distribution(const Subgraph& g,
                                            const Dataset& dataset,
                                            std::uint64_t* multiply_adds) {
  std::vector<double> qp, qn;
  for (auto i : dataset.positive_indices())
    qp.push_back(containment_probability(g, dataset.graph(i)));
  for (auto i : dataset.negative_indices())
    qn.push_back(containment_probability(g, dataset.graph(i)));
  return JointSupportDistribution(support_distribution(qp, multiply_adds),
                                  support_distribution(qn, multiply_adds));
}

double ScoreDistribution::total() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.prob;
  return s;
}

double score_group_key(ExtendedScore s) {
  if (!std::isfinite(s) || s == 0.0) return s;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", s);
  return std::strtod(buf, nullptr);
}

ScoreDistribution group_scores(std::vector<ScoreAtom> pairs) {
  std::erase_if(pairs, [](const ScoreAtom& p) { return !(p.prob > 0.0); });
  std::sort(pairs.begin(), pairs.end(),
            [](const ScoreAtom& x, const ScoreAtom& y) { return x.score < y.score; });
  ScoreDistribution out;
  double current_key = 0.0;
  for (const auto& p : pairs) {
    double key = score_group_key(p.score);
    if (!out.atoms.empty() && key == current_key) {
      out.atoms.back().prob += p.prob;
    } else {
      out.atoms.push_back(p);
      current_key = key;
    }
  }
  return out;
}

ScoreDistribution score_distribution(const JointSupportDistribution& joint,
                                     const ScoreTable& scores) {
  std::vector<ScoreAtom> pairs;
  pairs.reserve(joint.row_extent() * joint.col_extent());
  for (std::size_t a = 0; a < joint.row_extent(); ++a)
    for (std::size_t b = 0; b < joint.col_extent(); ++b) {
      double p = joint.cell(a, b);
      if (p > 0.0) pairs.push_back({scores(a, b), p});
    }
  return group_scores(std::move(pairs));
}

ScoreDistribution score_distribution(const JointSupportDistribution& joint,
                                     const ScoreFunctionSpec& spec) {
  return score_distribution(joint, score_table(spec, joint.n_pos(), joint.n_neg()));
}

void MeasureSpec::validate() const {
  if (kind == MeasureKind::PhiPr && !phi)
    throw ContractError("phi-pr measure requires a phi threshold");
  if (kind != MeasureKind::PhiPr && phi)
    throw ContractError("phi is only meaningful for the phi-pr measure");
  if (phi && std::isnan(*phi)) throw ContractError("phi must not be NaN");
}

std::optional<MeasureKind> parse_measure_kind(std::string_view name) {
  if (name == "exp") return MeasureKind::Exp;
  if (name == "median") return MeasureKind::Median;
  if (name == "mode") return MeasureKind::Mode;
  if (name == "phi-pr") return MeasureKind::PhiPr;
  return std::nullopt;
}

std::string_view measure_kind_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Exp: return "exp";
    case MeasureKind::Median: return "median";
    case MeasureKind::Mode: return "mode";
    case MeasureKind::PhiPr: return "phi-pr";
  }
  return "?";
}

ExtendedScore default_phi(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::HsicLinear: return 0.03;
    case ScoreKind::GTest: return 200.0;
    case ScoreKind::FrequencyRatio: return 1.0;
    case ScoreKind::Confidence: return 0.5;
  }
  return 0.0;
}

double default_cap_epsilon(MeasureKind measure, ScoreKind score) {
  return (measure == MeasureKind::Exp && can_be_infinite(score)) ? 0.01 : 0.0;
}

namespace {

template <typename CellScore>
ExtendedScore weighted_sum(const JointSupportDistribution& joint,
                           CellScore&& score) {
  double sum = 0.0;
  bool pos_inf = false, neg_inf = false;
  for (std::size_t a = 0; a < joint.row_extent(); ++a)
    for (std::size_t b = 0; b < joint.col_extent(); ++b) {
      double p = joint.cell(a, b);
      if (!(p > 0.0)) continue;  // inf * 0 contributes nothing
      double s = score(a, b);
      if (s == kInf)
        pos_inf = true;
      else if (s == -kInf)
        neg_inf = true;
      else
        sum += p * s;
    }
  if (pos_inf && neg_inf)
    throw ContractError("expectation undefined: both +inf and -inf scores");
  if (pos_inf) return kInf;
  if (neg_inf) return -kInf;
  return sum;
}

}  // namespace

ExtendedScore measure_exp(const JointSupportDistribution& joint,
                          const ScoreTable& scores) {
  return weighted_sum(joint, [&](std::size_t a, std::size_t b) { return scores(a, b); });
}

ExtendedScore measure_exp(const JointSupportDistribution& joint,
                          const ScoreFunctionSpec& spec) {
  return measure_exp(joint, score_table(spec, joint.n_pos(), joint.n_neg()));
}

ExtendedScore measure_exp(const ScoreDistribution& dist) {
  double sum = 0.0;
  bool pos_inf = false, neg_inf = false;
  for (const auto& atom : dist.atoms) {
    if (!(atom.prob > 0.0)) continue;
    if (atom.score == kInf)
      pos_inf = true;
    else if (atom.score == -kInf)
      neg_inf = true;
    else
      sum += atom.prob * atom.score;
  }
  if (pos_inf && neg_inf)
    throw ContractError("expectation undefined: both +inf and -inf scores");
  if (pos_inf) return kInf;
  if (neg_inf) return -kInf;
  return sum;
}

ExtendedScore measure_median(const ScoreDistribution& dist) {
  if (dist.atoms.empty()) throw ContractError("median of an empty distribution");
  double cdf = 0.0;
  std::optional<ExtendedScore> best;
  for (const auto& atom : dist.atoms) {
    cdf += atom.prob;
    if (cdf <= 0.5 + kProbabilityTolerance)
      best = atom.score;
    else
      break;
  }
  return best.value_or(dist.atoms.front().score);
}

ExtendedScore measure_mode(const ScoreDistribution& dist) {
  if (dist.atoms.empty()) throw ContractError("mode of an empty distribution");
  const ScoreAtom* best = &dist.atoms.front();
  for (const auto& atom : dist.atoms)
    if (atom.prob > best->prob + kProbabilityTolerance) best = &atom;
  return best->score;
}

double measure_phi_pr(const JointSupportDistribution& joint,
                      const ScoreTable& scores, ExtendedScore phi) {
  double sum = 0.0;
  for (std::size_t a = 0; a < joint.row_extent(); ++a)
    for (std::size_t b = 0; b < joint.col_extent(); ++b)
      if (scores(a, b) >= phi) sum += joint.cell(a, b);
  return std::min(sum, 1.0);
}

double measure_phi_pr(const JointSupportDistribution& joint,
                      const ScoreFunctionSpec& spec, ExtendedScore phi) {
  return measure_phi_pr(joint, score_table(spec, joint.n_pos(), joint.n_neg()), phi);
}

double measure_phi_pr(const ScoreDistribution& dist, ExtendedScore phi) {
  double sum = 0.0;
  for (const auto& atom : dist.atoms)
    if (atom.score >= phi) sum += atom.prob;
  return std::min(sum, 1.0);
}

ExtendedScore evaluate_measure(const JointSupportDistribution& joint,
                               const ScoreTable& scores,
                               const MeasureSpec& measure) {
  switch (measure.kind) {
    case MeasureKind::Exp:
      return measure_exp(joint, scores);
    case MeasureKind::Median:
      return measure_median(score_distribution(joint, scores));
    case MeasureKind::Mode:
      return measure_mode(score_distribution(joint, scores));
    case MeasureKind::PhiPr:
      return measure_phi_pr(joint, scores, measure.phi.value());
  }
  return 0.0;
}

double expected_frequency(const Subgraph& g, const Dataset& dataset) {
  if (dataset.empty()) throw ContractError("expected frequency of an empty dataset");
  double sum = 0.0;
  for (const auto& G : dataset.graphs()) sum += containment_probability(g, G);
  return sum / static_cast<double>(dataset.size());
}

ExtendedScore ub_exp(const JointSupportDistribution& joint,
                     const ScoreTable& envelope) {
  return measure_exp(joint, envelope);
}

double ub_phi_pr(const JointSupportDistribution& joint,
                 const ScoreTable& envelope, ExtendedScore phi) {
  return measure_phi_pr(joint, envelope, phi);
}

}  // namespace ugmine
