#include "ugmine/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ugmine/error.hpp"

namespace ugmine {

Edge Edge::make(NodeId a, NodeId b) {
  if (a == b) throw ContractError("self-loop on node " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

UncertainGraph::UncertainGraph(std::size_t num_nodes,
                               std::vector<WeightedEdge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
  for (auto& we : edges_) {
    we.edge = Edge::make(we.edge.u, we.edge.v);
    if (we.edge.v >= num_nodes_)
      throw ContractError("edge endpoint " + std::to_string(we.edge.v) +
                          " out of range for " + std::to_string(num_nodes_) +
                          " nodes");
    // written so that NaN is rejected too
    if (!(we.probability > 0.0 && we.probability <= 1.0))
      throw ContractError("probability out of range (0,1]: " +
                          format_real(we.probability));
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return a.edge < b.edge;
            });
  auto dup = std::adjacent_find(
      edges_.begin(), edges_.end(),
      [](const WeightedEdge& a, const WeightedEdge& b) {
        return a.edge == b.edge;
      });
  if (dup != edges_.end())
    throw ContractError("duplicate edge (" + std::to_string(dup->edge.u) + "," +
                        std::to_string(dup->edge.v) + ")");
}

double UncertainGraph::probability(const Edge& e) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const WeightedEdge& we, const Edge& key) { return we.edge < key; });
  if (it == edges_.end() || it->edge != e) return 0.0;
  return it->probability;
}

CertainGraph::CertainGraph(std::size_t num_nodes, std::vector<Edge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    e = Edge::make(e.u, e.v);
    if (e.v >= num_nodes_)
      throw ContractError("edge endpoint " + std::to_string(e.v) +
                          " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool CertainGraph::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool is_connected(std::span<const Edge> edges) {
  if (edges.empty()) return true;
  std::vector<NodeId> nodes;
  nodes.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    nodes.push_back(e.u);
    nodes.push_back(e.v);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  auto index_of = [&](NodeId n) {
    return static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), n) - nodes.begin());
  };
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = nodes.size();
  for (const auto& e : edges) {
    auto a = find(index_of(e.u));
    auto b = find(index_of(e.v));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Subgraph Subgraph::from_edges(std::vector<Edge> edges) {
  if (edges.empty()) throw ContractError("subgraph must have at least one edge");
  for (auto& e : edges) e = Edge::make(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ContractError("subgraph has a duplicate edge");
  if (!is_connected(edges)) throw ContractError("subgraph is not connected");
  return Subgraph(std::move(edges));
}

Subgraph Subgraph::from_canonical_unchecked(std::vector<Edge> edges) {
  return Subgraph(std::move(edges));
}

bool Subgraph::contains_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<NodeId> Subgraph::nodes() const {
  std::vector<NodeId> out;
  for (const auto& e : edges_) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Subgraph::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ',';
    os << '[' << edges_[i].u << ',' << edges_[i].v << ']';
  }
  os << ']';
  return os.str();
}

Dataset::Dataset(std::size_t num_nodes, std::vector<UncertainGraph> graphs,
                 std::vector<Label> labels, std::vector<std::string> ids)
    : num_nodes_(num_nodes),
      graphs_(std::move(graphs)),
      labels_(std::move(labels)),
      ids_(std::move(ids)) {
  if (labels_.size() != graphs_.size())
    throw ContractError("label count does not match graph count");
  if (ids_.empty()) {
    ids_.reserve(graphs_.size());
    for (std::size_t i = 0; i < graphs_.size(); ++i)
      ids_.push_back("g" + std::to_string(i));
  } else if (ids_.size() != graphs_.size()) {
    throw ContractError("id count does not match graph count");
  }
  for (std::size_t i = 0; i < graphs_.size(); ++i) {
    if (graphs_[i].num_nodes() != num_nodes_)
      throw ContractError("graph " + std::to_string(i) + " has " +
                          std::to_string(graphs_[i].num_nodes()) +
                          " nodes, dataset has " + std::to_string(num_nodes_));
    if (labels_[i] == Label::Positive)
      pos_.push_back(i);
    else if (labels_[i] == Label::Negative)
      neg_.push_back(i);
    else
      throw ContractError("graph " + std::to_string(i) + ": label not +1/-1");
  }
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<UncertainGraph> graphs;
  std::vector<Label> labels;
  std::vector<std::string> ids;
  for (auto i : indices) {
    if (i >= graphs_.size()) throw ContractError("subset index out of range");
    graphs.push_back(graphs_[i]);
    labels.push_back(labels_[i]);
    ids.push_back(ids_[i]);
  }
  return Dataset(num_nodes_, std::move(graphs), std::move(labels),
                 std::move(ids));
}

void Dataset::require_both_classes() const {
  if (pos_.empty() || neg_.empty())
    throw ContractError("dataset needs at least one positive and one negative "
                        "graph (have " + std::to_string(pos_.size()) + "/" +
                        std::to_string(neg_.size()) + ")");
}

bool contains(const Subgraph& g, const CertainGraph& G) {
  return std::includes(G.edges().begin(), G.edges().end(), g.edges().begin(),
                       g.edges().end());
}

double containment_probability(const Subgraph& g, const UncertainGraph& G) {
  double p = 1.0;
  for (const auto& e : g.edges()) {
    double pe = G.probability(e);
    if (pe == 0.0) return 0.0;
    p *= pe;
  }
  return p;
}

CertainGraph union_graph(const Dataset& dataset) {
  std::vector<Edge> edges;
  for (const auto& g : dataset.graphs())
    for (const auto& we : g.edges()) edges.push_back(we.edge);
  return CertainGraph(dataset.num_nodes(), std::move(edges));
}

std::string format_real(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buf, end);
}

}  // namespace ugmine
