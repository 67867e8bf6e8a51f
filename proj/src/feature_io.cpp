#include <cmath>
#include <sstream>

#include <json.hpp>

#include "ugmine/error.hpp"
#include "ugmine/miner.hpp"

namespace ugmine {

namespace {

std::string score_text(double v) {
  if (v == kInf) return "\"inf\"";
  if (v == -kInf) return "\"-inf\"";
  return format_real(v);
}

double read_score(const nlohmann::json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    if (v == "inf") return kInf;
    if (v == "-inf") return -kInf;
  }
  throw ParseError(where + ": expected a number, \"inf\" or \"-inf\"");
}

}  // namespace

std::string features_to_json(std::span<const MinedFeature> features, const MiningConfig& cfg) {
  std::ostringstream os;
  os << "{\"measure\": \"" << measure_kind_name(cfg.measure.kind) << "\", \"score\": \""
     << score_kind_name(cfg.score.kind) << "\"";
  if (cfg.measure.phi) os << ", \"phi\": " << score_text(*cfg.measure.phi);
  os << ", \"features\": [";
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto& f = features[i];
    os << (i ? ",\n  " : "\n  ");
    os << "{\"rank\": " << i + 1 << ", \"edges\": [";
    for (std::size_t k = 0; k < f.subgraph.size(); ++k) {
      if (k) os << ", ";
      os << '[' << f.subgraph.edges()[k].u << ", " << f.subgraph.edges()[k].v << ']';
    }
    os << "], \"measure_value\": " << score_text(f.measure_value)
       << ", \"exp_freq\": " << format_real(f.exp_freq) << '}';
  }
  os << (features.empty() ? "]}\n" : "\n]}\n");
  return os.str();
}

std::vector<MinedFeature> parse_features_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("features") || !doc["features"].is_array())
    throw ParseError("feature list needs an array field features");
  std::vector<MinedFeature> out;
  const auto& list = doc["features"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "feature " + std::to_string(i);
    const auto& jf = list[i];
    if (!jf.is_object() || !jf.contains("edges") || !jf["edges"].is_array())
      throw ParseError(where + ": missing array field edges");
    std::vector<Edge> edges;
    for (const auto& je : jf["edges"]) {
      if (!je.is_array() || je.size() != 2 || !je[0].is_number_unsigned() ||
          !je[1].is_number_unsigned())
        throw ParseError(where + ": edges must be [u, v] pairs of node indices");
      edges.push_back({je[0].get<NodeId>(), je[1].get<NodeId>()});
    }
    MinedFeature f{[&] {
      try {
        return Subgraph::from_edges(std::move(edges));
      } catch (const ContractError& e) {
        throw ParseError(where + ": " + e.what());
      }
    }(), 0.0, 0.0, std::nullopt};
    if (jf.contains("measure_value")) f.measure_value = read_score(jf["measure_value"], where);
    if (jf.contains("exp_freq")) f.exp_freq = read_score(jf["exp_freq"], where);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace ugmine
