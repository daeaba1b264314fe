#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mesostab/matrix.hpp"
#include "mesostab/vertex_set.hpp"

namespace mesostab {

/// Undirected weighted edge. Stored with u <= v; u == v is a loop.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 0.0;

  bool is_loop() const noexcept { return u == v; }
  bool touches(Vertex x) const noexcept { return u == x || v == x; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with nonzero real weights.
/// Loops are kept so that a matrix and its Coates graph carry the same
/// information; every structural query below ignores them.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Throws std::invalid_argument on a zero or non-finite weight, a vertex
  /// outside 0..n-1, or a repeated unordered pair.
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  std::optional<std::size_t> find_edge(Vertex a, Vertex b) const;
  bool has_loops() const;
  WeightedGraph without_loops() const;

  /// Loop-free degree.
  std::size_t degree(Vertex v) const;
  /// Indices of the non-loop edges at v, increasing.
  const std::vector<std::size_t>& incident_edges(Vertex v) const { return incident_.at(v); }

  bool is_connected() const;
  /// Connected components of the whole graph, isolated vertices included.
  std::vector<VertexSet> vertex_components() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// A set of edges of a host graph, identified by edge index. Holds a pointer
/// to the host, which must outlive the subset.
class EdgeSubset {
 public:
  explicit EdgeSubset(const WeightedGraph& host, std::vector<std::size_t> members = {});

  const WeightedGraph& host() const noexcept { return *host_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t edge_index) const;

  /// Product of member weights; 1 for the empty set.
  double weight() const;
  /// Vertices incident to at least one member.
  VertexSet vertices() const;
  std::vector<Edge> resolved() const;

  EdgeSubset set_union(const EdgeSubset& other) const;

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) {
    return a.host_ == b.host_ && a.members_ == b.members_;
  }
  friend bool operator<(const EdgeSubset& a, const EdgeSubset& b) {
    return a.members_ < b.members_;
  }

 private:
  const WeightedGraph* host_;
  std::vector<std::size_t> members_;
};

/// Oriented incidence matrix M (n × |E|, loops excluded) and weight diagonal W.
/// Column c corresponds to host edge `edge_of_column(c)`; an edge {i,j} with
/// i < j has +1 in row i and -1 in row j.
class OrientedIncidence {
 public:
  OrientedIncidence(std::size_t rows, std::vector<std::size_t> edge_columns,
                    std::vector<int> entries, std::vector<double> weights);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return edge_columns_.size(); }
  int operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  double weight(std::size_t c) const { return weights_[c]; }
  std::size_t edge_of_column(std::size_t c) const { return edge_columns_[c]; }
  std::optional<std::size_t> column_of_edge(std::size_t edge_index) const;

  DenseMatrix incidence() const;
  DenseMatrix weight_matrix() const;
  /// M W M^T
  SymmetricMatrix product() const;

 private:
  std::size_t rows_;
  std::vector<std::size_t> edge_columns_;
  std::vector<int> entries_;
  std::vector<double> weights_;
};

/// Weighted adjacency matrix; loops land on the diagonal.
SymmetricMatrix adjacency(const WeightedGraph& g);

/// L = D - A with loops removed first.
SymmetricMatrix laplacian(const WeightedGraph& g);

/// Edge {i,j} for every |a_ij| > zero_tolerance. The default 0 compares
/// exactly, which is right for matrices read from input; matrices produced
/// by arithmetic should pass kComputedZeroTolerance.
WeightedGraph coates_graph(const SymmetricMatrix& a, double zero_tolerance = 0.0);
inline constexpr double kComputedZeroTolerance = 1e-12;

/// True iff `a` has zero row sums, in which case laplacian(coates_graph(a)) == -a
/// and negative semi-definiteness of `a` is positive semi-definiteness of the
/// Laplacian.
bool negated_adjacency_check(const SymmetricMatrix& a);

OrientedIncidence incidence_factorization(const WeightedGraph& g);

/// Components of the subgraph formed by `k`, ordered by smallest vertex.
/// Vertices not touched by `k` are not reported.
std::vector<VertexSet> connected_components(const EdgeSubset& k);

bool is_forest(const EdgeSubset& k);

/// E(V1, V \ V1). Throws std::invalid_argument unless V1 is a nonempty proper
/// subset of the vertices.
EdgeSubset cut_edges(const WeightedGraph& g, const VertexSet& v1);

/// Vertex sequence of `h` if it is an induced line of its host: a path with at
/// least two edges whose interior vertices have degree two in the host and
/// whose end vertices are not adjacent. Returned with the smaller end first.
std::optional<std::vector<Vertex>> induced_line_path(const EdgeSubset& h);

/// Every maximal induced line with at least two edges, sorted by edge indices.
std::vector<EdgeSubset> induced_lines(const WeightedGraph& g);

}  // namespace mesostab
