#include "mesostab/report.hpp"

#include <algorithm>

#include "mesostab/error.hpp"

namespace mesostab {

std::string_view to_string(StabilityVerdict verdict) {
  switch (verdict) {
    case StabilityVerdict::passes_necessary_condition: return "passes necessary condition";
    case StabilityVerdict::fails_necessary_condition: return "fails necessary condition";
    case StabilityVerdict::degenerate: return "degenerate";
  }
  return "unknown";
}

std::size_t StabilityReport::line_violations() const {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [](const LineFinding& f) { return f.violated; }));
}

void attach_structure_diagnostics(StabilityReport& report, const WeightedGraph& g) {
  report.coates_edges.clear();
  for (const Edge& e : g.edges())
    if (!e.is_loop()) report.coates_edges.push_back(e);

  if (auto tree = positive_spanning_tree(g)) report.positive_spanning_tree = tree->resolved();
  else report.positive_spanning_tree.reset();

  report.negative_cut = find_negative_cut(g);
  report.negative_cut_edges.clear();
  if (report.negative_cut) report.negative_cut_edges = cut_edges(g, *report.negative_cut).resolved();

  report.lines.clear();
  for (const LineBoundReport& r : line_obstruction_scan(g)) {
    LineFinding f;
    f.line = r.line.resolved();
    for (std::size_t idx : r.negative_edges) f.negative_edges.push_back(g.edge(idx));
    f.bound = r.bound;
    f.violated = r.violated;
    report.lines.push_back(std::move(f));
  }
}

void certify_zero_row_sum(StabilityReport& report, const SymmetricMatrix& l,
                          const SylvesterOptions& options) {
  const std::size_t n = l.size();
  const DefinitenessVerdict v = is_psd_zero_row_sum(l, options);
  const Spectrum spectrum = symmetric_spectrum(l);
  report.method = "leading-minors";
  report.definiteness = v.kind;
  report.rank_estimate = spectrum.rank;
  report.minor_witness = v.minor;
  report.vector_witness.reset();
  if (v.kind == Definiteness::positive_semidefinite) {
    report.verdict = StabilityVerdict::passes_necessary_condition;
  } else if (spectrum.rank + 1 < n) {
    report.verdict = StabilityVerdict::degenerate;
  } else if (spectrum.min() >= -spectrum.tolerance) {
    report.method = "spectrum";
    report.definiteness = Definiteness::positive_semidefinite;
    report.minor_witness.reset();
    report.verdict = StabilityVerdict::passes_necessary_condition;
  } else {
    report.verdict = StabilityVerdict::fails_necessary_condition;
    report.vector_witness =
        VectorWitness{spectrum.lowest_eigenvector, l.quadratic_form(spectrum.lowest_eigenvector)};
  }
}

StabilityReport analyze_matrix(const SymmetricMatrix& a, const SylvesterOptions& options,
                               double zero_tolerance) {
  const SymmetricMatrix l = -a;
  const std::size_t n = a.size();
  StabilityReport report;
  report.dimension = n;
  report.zero_row_sums = a.has_zero_row_sums();

  if (n <= options.nmax) {
    const DefinitenessVerdict v = is_psd_full(l, options);
    report.method = "all-principal-minors";
    report.definiteness = v.kind;
    report.rank_estimate = v.rank_estimate;
    report.minor_witness = v.minor;
    report.vector_witness = v.vector;
    const bool psd = v.kind == Definiteness::positive_definite ||
                     v.kind == Definiteness::positive_semidefinite;
    if (!psd) report.verdict = StabilityVerdict::fails_necessary_condition;
    else if (report.zero_row_sums && v.rank_estimate + 1 < n) report.verdict = StabilityVerdict::degenerate;
    else report.verdict = StabilityVerdict::passes_necessary_condition;
  } else if (report.zero_row_sums) {
    certify_zero_row_sum(report, l, options);
  } else {
    throw GuardError("analyze_matrix (all principal minors)", n, options.nmax);
  }
  attach_structure_diagnostics(report, coates_graph(a, zero_tolerance));
  return report;
}

}  // namespace mesostab
