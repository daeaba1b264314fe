#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mesostab/graph.hpp"
#include "mesostab/vertex_set.hpp"

namespace mesostab {

// ---------------------------------------------------------------------------
// Positive spanning trees and negative cuts
// ---------------------------------------------------------------------------

/// A spanning forest of positive-weight edges with the same components as g
/// (a spanning tree when g is connected), built greedily in edge-index order.
/// Absent when some component cannot be spanned by positive edges.
std::optional<EdgeSubset> positive_spanning_tree(const WeightedGraph& g);

/// A vertex set V1 whose crossing edges E(V1, V \ V1) are all negative and
/// non-empty, or absent when every component has a positive spanning tree.
/// V1 is the positive-edge component of the first vertex that positive edges
/// cannot connect to the lowest vertex of its component.
std::optional<VertexSet> find_negative_cut(const WeightedGraph& g);

// ---------------------------------------------------------------------------
// Cutting a forest along a vertex partition V1 | V2
// ---------------------------------------------------------------------------

/// Sigma_B: edge sets inside E(V1, V2) with exactly one edge at each vertex of
/// B and none at the other vertices of V1. Sigma of the empty set is {∅}.
std::vector<EdgeSubset> sigma_family(const WeightedGraph& g, const VertexSet& v1, const VertexSet& b);

/// T_B: forests inside E(V1, V1) with |V1| - |B| edges in which every tree
/// holds exactly one vertex of B. T_{V1} = {∅}, T_∅ is empty.
std::vector<EdgeSubset> tee_family(const WeightedGraph& g, const VertexSet& v1, const VertexSet& b);

/// Sum of member weights: 0 for an empty family, 1 for {∅}.
double family_weight(const std::vector<EdgeSubset>& family);

struct CutFamily {
  VertexSet v1;
  VertexSet c;
  /// B ⊆ V1 \ C with non-empty Sigma_B and T_{C ∪ B}, keyed by B.
  std::vector<std::pair<VertexSet, std::vector<EdgeSubset>>> sigma;
  std::vector<std::pair<VertexSet, std::vector<EdgeSubset>>> tee;  // keyed by C ∪ B
  /// {A ∪ A' : A ∈ Sigma_B, A' ∈ T_{C ∪ B}} over all such B, sorted.
  std::vector<EdgeSubset> pieces;
  /// F_{V1 \ C} as enumerated directly ({∅} when C = V1).
  std::vector<EdgeSubset> forest_family;
  bool matches_forest_family = false;
};

/// Rebuilds F_{V1 \ C} from cut-crossing and cut-internal pieces and compares
/// with the direct enumeration. Throws std::invalid_argument unless V1 is a
/// nonempty proper vertex subset and C ⊆ V1.
CutFamily cut_decomposition(const WeightedGraph& g, const VertexSet& v1, const VertexSet& c);

struct CutIdentity {
  std::vector<double> terms;  // one per C ⊆ V1, in bitmask order
  double residual = 0.0;
  double term_scale = 0.0;    // sum of |terms|

  bool holds(double relative_tol = 1e-9) const {
    return std::abs(residual) <= relative_tol * term_scale;
  }
};

/// Relative size below which a computed minor is taken as exactly zero.
inline constexpr double kMinorZeroTolerance = 1e-9;

/// Sum over C ⊆ V1 of (-1)^|C| ω(Sigma_C) [L(G)]_{V1 \ C}, with the empty
/// minor taken as 1 and minors within kMinorZeroTolerance of their Hadamard
/// bound taken as 0. The sum vanishes; `residual` is what floating point left.
CutIdentity verify_cut_identity(const WeightedGraph& g, const VertexSet& v1,
                                std::size_t max_cut_side = 20);

// ---------------------------------------------------------------------------
// Induced lines
// ---------------------------------------------------------------------------

/// Interior vertices of an induced line (its path without the two ends).
VertexSet line_interior(const EdgeSubset& h);

/// Largest |ω(e)| compatible with a positive semi-definite Laplacian when e
/// is the only negative edge of the induced line h: 1 / Σ_{a ≠ e} 1/ω(a).
/// Throws std::invalid_argument if h is not an induced line, e is not in h or
/// not negative, or h has two or more negative edges.
double line_weight_bound(const WeightedGraph& g, const EdgeSubset& h, std::size_t e);

struct LineBoundReport {
  EdgeSubset line;
  std::vector<std::size_t> negative_edges;
  std::optional<double> bound;  // present iff exactly one negative edge
  bool violated = false;
};

/// One report per maximal induced line. |ω(e)| is compared against the bound
/// with relative slack `relative_tol`.
std::vector<LineBoundReport> line_obstruction_scan(const WeightedGraph& g,
                                                   double relative_tol = 1e-9);

}  // namespace mesostab
