#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mesostab/graph.hpp"
#include "mesostab/structure.hpp"
#include "mesostab/sylvester.hpp"

namespace mesostab {

enum class StabilityVerdict {
  passes_necessary_condition,
  fails_necessary_condition,
  // rank below n-1: the one-dimensional-kernel hypothesis does not hold
  degenerate,
};

std::string_view to_string(StabilityVerdict verdict);

/// A line finding with its edges copied out of the host graph.
struct LineFinding {
  std::vector<Edge> line;
  std::vector<Edge> negative_edges;
  std::optional<double> bound;
  bool violated = false;
};

/// Verdict on negative semi-definiteness of a symmetric matrix A, read as
/// positive semi-definiteness of L = -A, with structural diagnostics on the
/// Coates graph of A. Self-contained: no references into other objects.
struct StabilityReport {
  StabilityVerdict verdict = StabilityVerdict::degenerate;
  std::size_t dimension = 0;
  std::size_t rank_estimate = 0;
  bool zero_row_sums = false;
  /// Kind of L = -A from whichever test ran.
  Definiteness definiteness = Definiteness::not_certified;
  /// How `definiteness` was obtained: "all-principal-minors" or "leading-minors".
  std::string_view method;
  std::optional<MinorWitness> minor_witness;    // principal minor of L
  std::optional<VectorWitness> vector_witness;  // v^T L v < 0

  std::vector<Edge> coates_edges;  // loops excluded
  std::optional<std::vector<Edge>> positive_spanning_tree;
  std::optional<VertexSet> negative_cut;
  std::vector<Edge> negative_cut_edges;
  std::vector<LineFinding> lines;

  std::size_t line_violations() const;
};

/// Fills the Coates-graph fields of `report` from g.
void attach_structure_diagnostics(StabilityReport& report, const WeightedGraph& g);

/// Verdict for a zero-row-sum L = -A from the leading-minor certificate. When
/// the minors stay below the strict-positivity threshold but the spectrum shows
/// L positive semi-definite of rank n-1, the spectrum decides (method
/// "spectrum"); the threshold grows like a Hadamard bound and turns
/// conservative well before it turns wrong.
void certify_zero_row_sum(StabilityReport& report, const SymmetricMatrix& l,
                          const SylvesterOptions& options);

/// Full pipeline on a symmetric matrix A: the all-minors sweep on L = -A when
/// n <= nmax, otherwise the leading-minor certificate (zero row sums only),
/// followed by the Coates-graph diagnostics. A matrix with zero row sums must
/// also reach rank n-1, else the verdict is degenerate.
/// Throws GuardError when n > nmax and A lacks zero row sums.
StabilityReport analyze_matrix(const SymmetricMatrix& a, const SylvesterOptions& options = {},
                               double zero_tolerance = 0.0);

}  // namespace mesostab
