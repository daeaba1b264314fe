#include "mesostab/structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "disjoint_sets.hpp"
#include "mesostab/error.hpp"
#include "mesostab/minors.hpp"

namespace mesostab {

std::optional<EdgeSubset> positive_spanning_tree(const WeightedGraph& g) {
  detail::DisjointSets all(g.vertex_count());
  detail::DisjointSets positive(g.vertex_count());
  std::vector<std::size_t> tree;
  std::size_t needed = 0;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const Edge& e = g.edge(idx);
    if (e.is_loop()) continue;
    if (all.unite(e.u, e.v)) ++needed;
    if (e.weight > 0.0 && positive.unite(e.u, e.v)) tree.push_back(idx);
  }
  if (tree.size() != needed) return std::nullopt;
  return EdgeSubset(g, std::move(tree));
}

std::optional<VertexSet> find_negative_cut(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  detail::DisjointSets positive(n);
  for (const Edge& e : g.edges())
    if (e.weight > 0.0) positive.unite(e.u, e.v);
  for (const VertexSet& comp : g.vertex_components()) {
    const Vertex lowest = comp[0];
    for (Vertex v : comp) {
      if (positive.same(v, lowest)) continue;
      std::vector<Vertex> side;
      for (Vertex w : comp)
        if (positive.same(w, v)) side.push_back(w);
      return VertexSet(std::move(side));
    }
  }
  return std::nullopt;
}

namespace {

void require_partition(const WeightedGraph& g, const VertexSet& v1, const char* op) {
  if (v1.empty() || v1.size() >= g.vertex_count() || v1.max() >= g.vertex_count())
    throw std::invalid_argument(std::string(op) +
                                ": V1 must be a nonempty proper subset of the vertices");
}

}  // namespace

std::vector<EdgeSubset> sigma_family(const WeightedGraph& g, const VertexSet& v1,
                                     const VertexSet& b) {
  if (!b.is_subset_of(v1)) throw std::invalid_argument("sigma_family: B must lie inside V1");
  // Candidate crossing edges per vertex of B; the family is their product.
  std::vector<std::vector<std::size_t>> choices;
  for (Vertex i : b) {
    std::vector<std::size_t> at_i;
    for (std::size_t idx : g.incident_edges(i)) {
      if (!v1.contains(g.edge(idx).other(i))) at_i.push_back(idx);
    }
    if (at_i.empty()) return {};
    choices.push_back(std::move(at_i));
  }
  std::vector<EdgeSubset> family;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < choices.size(); ++k) members.push_back(choices[k][pick[k]]);
    family.emplace_back(g, std::move(members));
    std::size_t k = choices.size();
    while (k > 0 && ++pick[k - 1] == choices[k - 1].size()) pick[--k] = 0;
    if (k == 0) break;
  }
  std::sort(family.begin(), family.end());
  return family;
}

std::vector<EdgeSubset> tee_family(const WeightedGraph& g, const VertexSet& v1,
                                   const VertexSet& b) {
  if (!b.is_subset_of(v1)) throw std::invalid_argument("tee_family: B must lie inside V1");
  if (b.size() == v1.size()) return {EdgeSubset(g)};
  if (b.empty()) return {};
  // T_B is F_{V1 \ B} in the subgraph of edges with both ends in V1.
  std::vector<Edge> inside;
  std::vector<std::size_t> back;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const Edge& e = g.edge(idx);
    if (!e.is_loop() && v1.contains(e.u) && v1.contains(e.v)) {
      inside.push_back(e);
      back.push_back(idx);
    }
  }
  const WeightedGraph sub(g.vertex_count(), std::move(inside));
  std::vector<EdgeSubset> family;
  for_each_forest(sub, v1.set_difference(b), [&](const std::vector<std::size_t>& members) {
    std::vector<std::size_t> mapped;
    for (std::size_t idx : members) mapped.push_back(back[idx]);
    family.emplace_back(g, std::move(mapped));
  });
  std::sort(family.begin(), family.end());
  return family;
}

double family_weight(const std::vector<EdgeSubset>& family) {
  detail::CompensatedSum sum;
  for (const EdgeSubset& d : family) sum.add(d.weight());
  return sum.value();
}

CutFamily cut_decomposition(const WeightedGraph& g, const VertexSet& v1, const VertexSet& c) {
  require_partition(g, v1, "cut_decomposition");
  if (!c.is_subset_of(v1)) throw std::invalid_argument("cut_decomposition: C must lie inside V1");
  CutFamily out;
  out.v1 = v1;
  out.c = c;
  const VertexSet s = v1.set_difference(c);
  for_each_subset(s, [&](const VertexSet& b) {
    std::vector<EdgeSubset> sigma = sigma_family(g, v1, b);
    if (sigma.empty()) return;
    const VertexSet roots = c.set_union(b);
    std::vector<EdgeSubset> tee = tee_family(g, v1, roots);
    if (tee.empty()) return;
    for (const EdgeSubset& a : sigma)
      for (const EdgeSubset& a2 : tee) out.pieces.push_back(a.set_union(a2));
    out.sigma.emplace_back(b, std::move(sigma));
    out.tee.emplace_back(roots, std::move(tee));
  });
  std::sort(out.pieces.begin(), out.pieces.end());

  if (s.empty()) {
    out.forest_family = {EdgeSubset(g)};
  } else {
    out.forest_family = enumerate_forest_family(g, s).members;
  }
  std::vector<EdgeSubset> unique_pieces = out.pieces;
  unique_pieces.erase(std::unique(unique_pieces.begin(), unique_pieces.end()),
                      unique_pieces.end());
  out.matches_forest_family =
      unique_pieces.size() == out.pieces.size() && unique_pieces == out.forest_family;
  return out;
}

CutIdentity verify_cut_identity(const WeightedGraph& g, const VertexSet& v1,
                                std::size_t max_cut_side) {
  require_partition(g, v1, "verify_cut_identity");
  if (v1.size() > max_cut_side) throw GuardError("verify_cut_identity", v1.size(), max_cut_side);
  const SymmetricMatrix l = laplacian(g);
  CutIdentity out;
  detail::CompensatedSum sum;
  for_each_subset(v1, [&](const VertexSet& c) {
    const VertexSet rest = v1.set_difference(c);
    const double sigma = family_weight(sigma_family(g, v1, c));
    double minor = 1.0;
    if (!rest.empty()) {
      minor = principal_minor_direct(l, rest);
      // numerically zero minors count as exact zeros
      if (std::abs(minor) <= kMinorZeroTolerance * hadamard_bound(l.principal_submatrix(rest)))
        minor = 0.0;
    }
    const double term = (c.size() % 2 == 0 ? 1.0 : -1.0) * sigma * minor;
    out.terms.push_back(term);
    out.term_scale += std::abs(term);
    sum.add(term);
  });
  out.residual = sum.value();
  return out;
}

VertexSet line_interior(const EdgeSubset& h) {
  const auto path = induced_line_path(h);
  if (!path) throw std::invalid_argument("line_interior: not an induced line");
  return VertexSet(std::vector<Vertex>(path->begin() + 1, path->end() - 1));
}

double line_weight_bound(const WeightedGraph& g, const EdgeSubset& h, std::size_t e) {
  if (&h.host() != &g) throw std::invalid_argument("line_weight_bound: line belongs to another graph");
  if (!induced_line_path(h)) throw std::invalid_argument("line_weight_bound: H is not an induced line");
  if (!h.contains(e)) throw std::invalid_argument("line_weight_bound: e is not an edge of H");
  if (!(g.edge(e).weight < 0.0))
    throw std::invalid_argument("line_weight_bound: e is not a negative edge");
  double reciprocal_sum = 0.0;
  for (std::size_t idx : h.members()) {
    if (idx == e) continue;
    const double w = g.edge(idx).weight;
    if (w < 0.0)
      throw std::invalid_argument(
          "line_weight_bound: H has two or more negative edges, which already rules out "
          "semi-definiteness");
    reciprocal_sum += 1.0 / w;
  }
  return 1.0 / reciprocal_sum;
}

std::vector<LineBoundReport> line_obstruction_scan(const WeightedGraph& g, double relative_tol) {
  std::vector<LineBoundReport> reports;
  for (EdgeSubset& line : induced_lines(g)) {
    LineBoundReport r{line, {}, std::nullopt, false};
    for (std::size_t idx : line.members())
      if (g.edge(idx).weight < 0.0) r.negative_edges.push_back(idx);
    if (r.negative_edges.size() >= 2) {
      r.violated = true;
    } else if (r.negative_edges.size() == 1) {
      const std::size_t e = r.negative_edges.front();
      r.bound = line_weight_bound(g, line, e);
      r.violated = std::abs(g.edge(e).weight) > *r.bound * (1.0 + relative_tol);
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace mesostab
