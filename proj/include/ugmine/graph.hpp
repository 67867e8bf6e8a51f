#pragma once

// Uncertain and certain graphs over a shared node universe.
//
// Every node carries a unique label (its index), so a subgraph has at most one
// embedding in any graph and containment reduces to edge-set inclusion.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ugmine {

using NodeId = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 1;

  /// Canonicalizes the endpoint order. Throws ContractError on a self-loop.
  static Edge make(NodeId a, NodeId b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct WeightedEdge {
  Edge edge;
  double probability = 1.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// G = (V, E, p): every edge exists independently with probability p in (0, 1].
class UncertainGraph {
 public:
  UncertainGraph() = default;

  /// Validates endpoints, probabilities and duplicates; edges may come in any
  /// order and are sorted canonically. Throws ContractError.
  UncertainGraph(std::size_t num_nodes, std::vector<WeightedEdge> edges);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const WeightedEdge> edges() const { return edges_; }

  /// p(e), or 0 when e is not an edge of this graph.
  double probability(const Edge& e) const;

  friend bool operator==(const UncertainGraph&, const UncertainGraph&) = default;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<WeightedEdge> edges_;  // sorted by edge
};

/// One deterministic world; also used for the mining search universe.
class CertainGraph {
 public:
  CertainGraph() = default;
  CertainGraph(std::size_t num_nodes, std::vector<Edge> edges);

  std::size_t num_nodes() const { return num_nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  bool has_edge(const Edge& e) const;

  friend bool operator==(const CertainGraph&, const CertainGraph&) = default;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<Edge> edges_;  // sorted, unique
};

/// A connected, non-empty edge set in canonical (sorted) order.
class Subgraph {
 public:
  /// Sorts, rejects duplicates, empty input and disconnected edge sets.
  static Subgraph from_edges(std::vector<Edge> edges);

  /// For callers that already hold a canonical connected edge list.
  static Subgraph from_canonical_unchecked(std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool contains_edge(const Edge& e) const;
  std::vector<NodeId> nodes() const;
  std::string to_string() const;

  friend auto operator<=>(const Subgraph&, const Subgraph&) = default;

 private:
  explicit Subgraph(std::vector<Edge> edges) : edges_(std::move(edges)) {}
  std::vector<Edge> edges_;
};

/// True if the edge-induced graph of `edges` is connected. Empty sets count as
/// connected.
bool is_connected(std::span<const Edge> edges);

enum class Label : std::int8_t { Positive = 1, Negative = -1 };

/// Labelled collection of uncertain graphs sharing one node universe.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::size_t num_nodes, std::vector<UncertainGraph> graphs,
          std::vector<Label> labels, std::vector<std::string> ids = {});

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t size() const { return graphs_.size(); }
  bool empty() const { return graphs_.empty(); }

  std::span<const UncertainGraph> graphs() const { return graphs_; }
  std::span<const Label> labels() const { return labels_; }
  std::span<const std::string> ids() const { return ids_; }
  const UncertainGraph& graph(std::size_t i) const { return graphs_[i]; }
  Label label(std::size_t i) const { return labels_[i]; }

  std::span<const std::size_t> positive_indices() const { return pos_; }
  std::span<const std::size_t> negative_indices() const { return neg_; }
  std::size_t n_pos() const { return pos_.size(); }
  std::size_t n_neg() const { return neg_.size(); }

  /// Sub-dataset of the given graph indices, in the given order.
  Dataset subset(std::span<const std::size_t> indices) const;

  /// Throws ContractError unless both classes are present.
  void require_both_classes() const;

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.num_nodes_ == b.num_nodes_ && a.graphs_ == b.graphs_ &&
           a.labels_ == b.labels_ && a.ids_ == b.ids_;
  }

 private:
  std::size_t num_nodes_ = 0;
  std::vector<UncertainGraph> graphs_;
  std::vector<Label> labels_;
  std::vector<std::string> ids_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> neg_;
};

/// Every edge of g is an edge of G.
bool contains(const Subgraph& g, const CertainGraph& G);

/// Pr(g is contained in a world of G): product of p(e) over g's edges, or 0
/// when any edge is missing.
double containment_probability(const Subgraph& g, const UncertainGraph& G);

/// Union of the edge sets of every graph in the dataset.
CertainGraph union_graph(const Dataset& dataset);

// Dataset file (JSON):
//   {"num_nodes": N, "graphs": [{"id": "...", "label": 1|-1,
//                                "edges": [[u, v, p], ...]}, ...]}
Dataset parse_dataset(std::string_view text);
std::string serialize_dataset(const Dataset& dataset);
Dataset load_dataset(const std::string& path);
void save_dataset(const Dataset& dataset, const std::string& path);

/// Shortest decimal text that round-trips the double (0.55 -> "0.55").
std::string format_real(double value);

}  // namespace ugmine
