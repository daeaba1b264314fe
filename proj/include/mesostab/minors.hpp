#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mesostab/graph.hpp"
#include "mesostab/matrix.hpp"
#include "mesostab/vertex_set.hpp"

namespace mesostab {

/// F_S: the edge sets K with |K| = |S| in which every connected component
/// reaches a vertex outside S. Members are forests in which each tree holds
/// exactly one vertex outside S.
struct ForestFamily {
  VertexSet s;
  std::vector<EdgeSubset> members;  // lexicographic by edge index

  /// Sum over members of the product of edge weights (compensated).
  double weight() const;
};

/// det(L_{S,S}) by partial-pivoting elimination. Throws std::invalid_argument
/// on an empty or out-of-range S.
double principal_minor_direct(const SymmetricMatrix& l, const VertexSet& s);

/// Calls `visit` with the sorted edge indices of every member of F_S, in
/// lexicographic order. Loops are never used. Returns the member count.
std::size_t for_each_forest(const WeightedGraph& g, const VertexSet& s,
                            const std::function<void(const std::vector<std::size_t>&)>& visit);

/// Exact enumeration of F_S with cycle and two-roots-per-tree pruning. Every
/// member is re-checked against the forest structure before it is returned.
ForestFamily enumerate_forest_family(const WeightedGraph& g, const VertexSet& s);

/// [L(G)]_{S,S} as the weighted forest sum over F_S.
double principal_minor_combinatorial(const WeightedGraph& g, const VertexSet& s);

/// |det(M_{S,K})| computed with exact integer elimination; always 0 or 1.
/// Throws std::invalid_argument when |S| != |K| or K holds an edge without an
/// incidence column (a loop).
int incidence_minor_magnitude(const OrientedIncidence& m, const VertexSet& s, const EdgeSubset& k);

/// Sum over |K| = |I| subsets K of {0..m-1} of [D]_{I,K} [E]_{K,J}, for D
/// p×m and E m×q. Slow by design: meant as an oracle for minors of products.
double cauchy_binet_expand(const DenseMatrix& d, const DenseMatrix& e,
                           const std::vector<std::size_t>& rows_i,
                           const std::vector<std::size_t>& cols_j);

namespace detail {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const noexcept { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace detail

}  // namespace mesostab
