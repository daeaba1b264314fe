#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's algorithms; inputs are plain vectors or the graph
// container only.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "mesostab/graph.hpp"
#include "mesostab/matrix.hpp"

namespace oracle {

using Rows = std::vector<std::vector<double>>;

inline Rows to_rows(const mesostab::SymmetricMatrix& m) {
  Rows r(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = m(i, j);
  return r;
}

inline Rows submatrix(const Rows& m, const std::vector<std::size_t>& idx) {
  Rows s(idx.size(), std::vector<double>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) s[a][b] = m[idx[a]][idx[b]];
  return s;
}

/// Laplace expansion along the first row. Exact for small integer matrices.
inline double laplace_det(const Rows& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1.0;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  double det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0.0) continue;
    Rows minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * m[0][c] * laplace_det(minor);
  }
  return det;
}

/// L = D - A built straight from the edge list, loops skipped.
inline Rows laplacian(const mesostab::WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  Rows l(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    l[e.u][e.v] -= e.weight;
    l[e.v][e.u] -= e.weight;
    l[e.u][e.u] += e.weight;
    l[e.v][e.v] += e.weight;
  }
  return l;
}

/// Component label per vertex for the subgraph formed by the chosen edges.
inline std::vector<std::size_t> component_labels(const mesostab::WeightedGraph& g,
                                                 const std::vector<std::size_t>& edges) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t idx : edges) {
    const auto& e = g.edge(idx);
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != n) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (label[w] == n) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

/// Depth-first search for a cycle; a loop or a repeated pair is a cycle.
inline bool has_cycle(const mesostab::WeightedGraph& g, const std::vector<std::size_t>& edges) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t idx : edges) {
    const auto& e = g.edge(idx);
    if (e.u == e.v) return true;
    adj[e.u].push_back({e.v, idx});
    adj[e.v].push_back({e.u, idx});
  }
  std::vector<int> seen(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    // (vertex, edge used to arrive)
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, SIZE_MAX}};
    while (!stack.empty()) {
      const auto [v, via] = stack.back();
      stack.pop_back();
      if (seen[v]) return true;
      seen[v] = 1;
      for (const auto& [w, idx] : adj[v]) {
        if (idx == via) continue;
        if (seen[w]) return true;
        stack.push_back({w, idx});
      }
    }
  }
  return false;
}

template <typename F>
void for_each_combination(std::size_t m, std::size_t k, F&& f) {
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > m) return;
  while (true) {
    f(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

inline std::vector<std::size_t> non_loop_edges(const mesostab::WeightedGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.edge(i).u != g.edge(i).v) out.push_back(i);
  return out;
}

/// F_S straight from the definition: every |S|-subset of edges such that each
/// component of (V, K) meeting S also reaches a vertex outside S. A vertex of S
/// untouched by K is a component of its own and disqualifies K.
inline std::vector<std::vector<std::size_t>> forest_family(const mesostab::WeightedGraph& g,
                                                           const std::vector<bool>& in_s) {
  const std::size_t k = static_cast<std::size_t>(std::count(in_s.begin(), in_s.end(), true));
  const auto pool = non_loop_edges(g);
  std::vector<std::vector<std::size_t>> family;
  for_each_combination(pool.size(), k, [&](const std::vector<std::size_t>& pick) {
    std::vector<std::size_t> edges;
    for (std::size_t p : pick) edges.push_back(pool[p]);
    const auto label = component_labels(g, edges);
    std::vector<bool> touched(g.vertex_count(), false), reaches(g.vertex_count(), false);
    for (std::size_t idx : edges) touched[g.edge(idx).u] = touched[g.edge(idx).v] = true;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (touched[v] && !in_s[v]) reaches[label[v]] = true;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if ((touched[v] || in_s[v]) && !reaches[label[v]]) return;
    family.push_back(edges);
  });
  return family;
}

/// Weighted sum over all spanning trees: (n-1)-subsets that connect everything.
inline double spanning_tree_sum(const mesostab::WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto pool = non_loop_edges(g);
  double sum = 0.0;
  for_each_combination(pool.size(), n - 1, [&](const std::vector<std::size_t>& pick) {
    std::vector<std::size_t> edges;
    double w = 1.0;
    for (std::size_t p : pick) {
      edges.push_back(pool[p]);
      w *= g.edge(pool[p]).weight;
    }
    const auto label = component_labels(g, edges);
    if (std::all_of(label.begin(), label.end(), [](std::size_t c) { return c == 0; })) sum += w;
  });
  return sum;
}

inline bool is_connected(const mesostab::WeightedGraph& g) {
  std::vector<std::size_t> all(g.edge_count());
  std::iota(all.begin(), all.end(), 0);
  const auto label = component_labels(g, all);
  return std::all_of(label.begin(), label.end(), [](std::size_t c) { return c == 0; });
}

/// Tries all 2^(n-1) - 1 bipartitions with vertex 0 on the far side.
inline bool has_negative_cut(const mesostab::WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t mask = 1; mask < (std::size_t{1} << (n - 1)); ++mask) {
    const auto side = [&](std::size_t v) { return v > 0 && ((mask >> (v - 1)) & 1U); };
    bool all_negative = true;
    for (const auto& e : g.edges())
      if (side(e.u) != side(e.v) && e.weight > 0.0) all_negative = false;
    if (all_negative) return true;
  }
  return false;
}

/// Cyclic Jacobi rotations; eigenvalues ascending.
inline std::vector<double> jacobi_eigenvalues(Rows a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Characteristic polynomial det(tI - A) by Faddeev-LeVerrier, leading 1 first.
inline std::vector<double> characteristic_polynomial(const Rows& a) {
  const std::size_t n = a.size();
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  Rows m(n, std::vector<double>(n, 0.0));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Rows next(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next[i][j] += a[i][l] * m[l][j];
      next[i][i] += c[k - 1];
    }
    m = next;
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    c[k] = -trace / static_cast<double>(k);
  }
  return c;
}

// ---- random instance families ----

inline double nonzero_int_weight(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(1, bound);
  std::bernoulli_distribution sign(0.5);
  return (sign(rng) ? 1.0 : -1.0) * d(rng);
}

/// Random simple graph on n vertices with at most max_edges edges.
template <typename Weight>
mesostab::WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t max_edges,
                                     Weight&& weight, bool connected = false) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  if (connected) {
    // random tree first: attach each vertex to an earlier one
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 1; k < n; ++k) {
      std::uniform_int_distribution<std::size_t> d(0, k - 1);
      const std::size_t a = order[k], b = order[d(rng)];
      chosen.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  const std::size_t cap = std::max(max_edges, chosen.size());
  std::uniform_int_distribution<std::size_t> extra(0, cap - chosen.size());
  std::size_t want = chosen.size() + extra(rng);
  for (const auto& p : pairs) {
    if (chosen.size() >= want) break;
    if (std::find(chosen.begin(), chosen.end(), p) == chosen.end()) chosen.push_back(p);
  }
  std::vector<mesostab::Edge> edges;
  for (const auto& [i, j] : chosen) edges.push_back({i, j, weight(rng)});
  return mesostab::WeightedGraph(n, std::move(edges));
}

/// Symmetric integer off-diagonals in [-3, 3], diagonal set for zero row sums.
inline mesostab::SymmetricMatrix random_zero_row_sum(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  mesostab::SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, d(rng));
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) s += m(i, j);
    m.set(i, i, -s);
  }
  return m;
}

}  // namespace oracle
