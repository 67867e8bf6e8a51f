#include "ugmine/scores.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ugmine/error.hpp"

namespace ugmine {

namespace {

// x * ln(num / den) with the 0*ln(.) = 0 and x*ln(./0) = +inf conventions.
double xlog_ratio(double x, double num, double den) {
  if (x == 0.0) return 0.0;
  if (den == 0.0) return kInf;
  return x * std::log(num / den);
}

double raw_score(ScoreKind kind, double a, double b, double np, double nn) {
  switch (kind) {
    case ScoreKind::Confidence:
      return (a + b == 0.0) ? 0.0 : a / (a + b);
    case ScoreKind::FrequencyRatio: {
      if (a == 0.0 && b == 0.0) return 0.0;
      if (a == 0.0 || b == 0.0) return kInf;  // |log 0| and |log inf|
      return std::fabs(std::log((a * nn) / (b * np)));
    }
    case ScoreKind::GTest: {
      double first = xlog_ratio(a, a * nn, b * np);
      double second = xlog_ratio(np - a, nn * (np - a), np * (nn - b));
      return 2.0 * first + 2.0 * second;
    }
    case ScoreKind::HsicLinear: {
      double n = np + nn;
      double d = a * nn - b * np;
      return (d * d) / ((n - 1.0) * (n - 1.0) * n * n);
    }
  }
  return 0.0;
}

void check_counts(std::size_t a, std::size_t b, std::size_t n_pos,
                  std::size_t n_neg) {
  if (n_pos < 1 || n_neg < 1)
    throw ContractError("score functions need n_pos >= 1 and n_neg >= 1");
  if (a > n_pos || b > n_neg)
    throw ContractError("support pair (" + std::to_string(a) + "," +
                        std::to_string(b) + ") exceeds class sizes (" +
                        std::to_string(n_pos) + "," + std::to_string(n_neg) + ")");
}

double apply_cap(const ScoreFunctionSpec& spec, double value) {
  if (spec.cap_epsilon > 0.0) return std::min(value, 1.0 / spec.cap_epsilon);
  return value;
}

}  // namespace

std::optional<ScoreKind> parse_score_kind(std::string_view name) {
  if (name == "conf") return ScoreKind::Confidence;
  if (name == "ratio") return ScoreKind::FrequencyRatio;
  if (name == "gtest") return ScoreKind::GTest;
  if (name == "hsic") return ScoreKind::HsicLinear;
  return std::nullopt;
}

std::string_view score_kind_name(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::Confidence: return "conf";
    case ScoreKind::FrequencyRatio: return "ratio";
    case ScoreKind::GTest: return "gtest";
    case ScoreKind::HsicLinear: return "hsic";
  }
  return "?";
}

bool can_be_infinite(ScoreKind kind) {
  return kind == ScoreKind::FrequencyRatio || kind == ScoreKind::GTest;
}

ExtendedScore eval_score(const ScoreFunctionSpec& spec, std::size_t a,
                         std::size_t b, std::size_t n_pos, std::size_t n_neg) {
  check_counts(a, b, n_pos, n_neg);
  if (spec.cap_epsilon < 0.0) throw ContractError("cap_epsilon must be >= 0");
  return apply_cap(spec, raw_score(spec.kind, static_cast<double>(a),
                                   static_cast<double>(b),
                                   static_cast<double>(n_pos),
                                   static_cast<double>(n_neg)));
}

ExtendedScore upper_envelope(const ScoreFunctionSpec& spec, std::size_t a,
                             std::size_t b, std::size_t n_pos,
                             std::size_t n_neg) {
  check_counts(a, b, n_pos, n_neg);
  ScoreFunctionSpec raw = spec;
  raw.cap_epsilon = 0.0;
  double best = -kInf;
  for (std::size_t i = 0; i <= a; ++i)
    for (std::size_t j = 0; j <= b; ++j)
      best = std::max(best, eval_score(raw, i, j, n_pos, n_neg));
  return apply_cap(spec, best);
}

ScoreTable score_table(const ScoreFunctionSpec& spec, std::size_t n_pos,
                       std::size_t n_neg) {
  check_counts(0, 0, n_pos, n_neg);
  ScoreTable t(n_pos, n_neg);
  for (std::size_t a = 0; a <= n_pos; ++a)
    for (std::size_t b = 0; b <= n_neg; ++b)
      t.at(a, b) = eval_score(spec, a, b, n_pos, n_neg);
  return t;
}

ScoreTable envelope_table(const ScoreFunctionSpec& spec, std::size_t n_pos,
                          std::size_t n_neg) {
  // min(., cap) commutes with max, so the capped table can be built directly.
  ScoreTable t = score_table(spec, n_pos, n_neg);
  for (std::size_t a = 0; a <= n_pos; ++a)
    for (std::size_t b = 0; b <= n_neg; ++b) {
      if (a > 0) t.at(a, b) = std::max(t(a, b), t(a - 1, b));
      if (b > 0) t.at(a, b) = std::max(t(a, b), t(a, b - 1));
    }
  return t;
}

}  // namespace ugmine
