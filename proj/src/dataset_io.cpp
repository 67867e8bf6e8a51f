#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ugmine/error.hpp"
#include "ugmine/graph.hpp"

namespace ugmine {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? what : where + ": " + what);
}

std::uint64_t read_index(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
    fail(where, "expected a non-negative integer");
  return value.get<std::uint64_t>();
}

}  // namespace

Dataset parse_dataset(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "top level must be an object");
  if (!doc.contains("num_nodes")) fail("", "missing field num_nodes");
  const std::size_t num_nodes = read_index(doc["num_nodes"], "num_nodes");
  if (!doc.contains("graphs") || !doc["graphs"].is_array())
    fail("", "missing array field graphs");

  std::vector<UncertainGraph> graphs;
  std::vector<Label> labels;
  std::vector<std::string> ids;
  const auto& jgraphs = doc["graphs"];
  for (std::size_t gi = 0; gi < jgraphs.size(); ++gi) {
    const std::string where = "graph " + std::to_string(gi);
    const auto& jg = jgraphs[gi];
    if (!jg.is_object()) fail(where, "expected an object");

    if (jg.contains("id")) {
      if (!jg["id"].is_string()) fail(where + " field id", "expected a string");
      ids.push_back(jg["id"].get<std::string>());
    } else {
      ids.push_back("g" + std::to_string(gi));
    }

    if (!jg.contains("label")) fail(where, "missing field label");
    const auto& jl = jg["label"];
    if (!jl.is_number_integer() ||
        (jl.get<std::int64_t>() != 1 && jl.get<std::int64_t>() != -1))
      fail(where + " field label", "label must be 1 or -1");
    labels.push_back(jl.get<std::int64_t>() == 1 ? Label::Positive
                                                 : Label::Negative);

    if (!jg.contains("edges") || !jg["edges"].is_array())
      fail(where, "missing array field edges");
    std::vector<WeightedEdge> edges;
    const auto& je = jg["edges"];
    for (std::size_t ei = 0; ei < je.size(); ++ei) {
      const std::string ewhere = where + " field edges[" + std::to_string(ei) + "]";
      const auto& triple = je[ei];
      if (!triple.is_array() || triple.size() != 3)
        fail(ewhere, "expected [u, v, p]");
      auto u = read_index(triple[0], ewhere + " u");
      auto v = read_index(triple[1], ewhere + " v");
      if (!triple[2].is_number()) fail(ewhere, "probability must be a number");
      double p = triple[2].get<double>();
      if (u == v) fail(ewhere, "self-loop");
      if (u >= num_nodes || v >= num_nodes)
        fail(ewhere, "node index out of range (num_nodes " +
                         std::to_string(num_nodes) + ")");
      if (!(p > 0.0 && p <= 1.0))
        fail(ewhere, "probability out of range (0,1]: " + format_real(p));
      edges.push_back({Edge::make(static_cast<NodeId>(u), static_cast<NodeId>(v)), p});
    }
    try {
      graphs.emplace_back(num_nodes, std::move(edges));
    } catch (const ContractError& e) {
      fail(where + " field edges", e.what());
    }
  }
  return Dataset(num_nodes, std::move(graphs), std::move(labels), std::move(ids));
}

std::string serialize_dataset(const Dataset& dataset) {
  std::ostringstream os;
  os << "{\"num_nodes\": " << dataset.num_nodes() << ", \"graphs\": [";
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    os << (i ? ",\n  " : "\n  ");
    os << "{\"id\": " << json(dataset.ids()[i]).dump()
       << ", \"label\": " << (dataset.label(i) == Label::Positive ? "1" : "-1")
       << ", \"edges\": [";
    const auto edges = dataset.graph(i).edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (k) os << ", ";
      os << '[' << edges[k].edge.u << ", " << edges[k].edge.v << ", "
         << format_real(edges[k].probability) << ']';
    }
    os << "]}";
  }
  os << (dataset.empty() ? "]}\n" : "\n]}\n");
  return os.str();
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str());
}

void save_dataset(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << serialize_dataset(dataset);
}

}  // namespace ugmine
