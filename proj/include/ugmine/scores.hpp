#pragma once

// Discrimination score functions f(a, b, n_pos, n_neg), where a and b are the
// numbers of positive and negative graphs containing a feature in one world.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ugmine {

/// Real score extended with +inf/-inf. Never NaN.
using ExtendedScore = double;

inline constexpr ExtendedScore kInf = std::numeric_limits<double>::infinity();

enum class ScoreKind { Confidence, FrequencyRatio, GTest, HsicLinear };

struct ScoreFunctionSpec {
  ScoreKind kind = ScoreKind::FrequencyRatio;
  /// min(raw, 1/cap_epsilon) when positive; 0 disables capping.
  double cap_epsilon = 0.0;
};

/// CLI names: conf, ratio, gtest, hsic.
std::optional<ScoreKind> parse_score_kind(std::string_view name);
std::string_view score_kind_name(ScoreKind kind);

/// Can the uncapped score reach +inf on some support pair?
bool can_be_infinite(ScoreKind kind);

/// Score for support pair (a, b). Conventions for degenerate counts:
/// Confidence(0,0) = 0, FrequencyRatio(0,0) = 0, and inside GTest each x*ln(r)
/// term is 0 when x = 0 and +inf when x > 0 with a zero denominator.
/// Throws ContractError unless 0 <= a <= n_pos, 0 <= b <= n_neg, n_pos, n_neg >= 1.
ExtendedScore eval_score(const ScoreFunctionSpec& spec, std::size_t a,
                         std::size_t b, std::size_t n_pos, std::size_t n_neg);

/// max of eval_score over the dominated grid a' <= a, b' <= b. Brute force;
/// envelope_table is the fast path.
ExtendedScore upper_envelope(const ScoreFunctionSpec& spec, std::size_t a,
                             std::size_t b, std::size_t n_pos, std::size_t n_neg);

/// Dense (n_pos+1) x (n_neg+1) table of scores indexed by support pair.
class ScoreTable {
 public:
  ScoreTable() = default;
  ScoreTable(std::size_t n_pos, std::size_t n_neg)
      : n_pos_(n_pos), n_neg_(n_neg), cells_((n_pos + 1) * (n_neg + 1), 0.0) {}

  std::size_t n_pos() const { return n_pos_; }
  std::size_t n_neg() const { return n_neg_; }

  ExtendedScore operator()(std::size_t a, std::size_t b) const {
    return cells_[a * (n_neg_ + 1) + b];
  }
  ExtendedScore& at(std::size_t a, std::size_t b) {
    return cells_[a * (n_neg_ + 1) + b];
  }

 private:
  std::size_t n_pos_ = 0;
  std::size_t n_neg_ = 0;
  std::vector<ExtendedScore> cells_;
};

/// eval_score for every support pair.
ScoreTable score_table(const ScoreFunctionSpec& spec, std::size_t n_pos,
                       std::size_t n_neg);

/// Upper envelope for every support pair via the running-max recurrence
/// t[a][b] = max(f(a,b), t[a-1][b], t[a][b-1]).
ScoreTable envelope_table(const ScoreFunctionSpec& spec, std::size_t n_pos,
                          std::size_t n_neg);

}  // namespace ugmine
