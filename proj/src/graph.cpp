#include "mesostab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "disjoint_sets.hpp"

namespace mesostab {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), incident_(n) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
    Edge& e = edges_[idx];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= n_) {
      throw std::invalid_argument("WeightedGraph: edge " + std::to_string(idx + 1) +
                                  " uses a vertex outside 1.." + std::to_string(n_));
    }
    if (e.weight == 0.0 || !std::isfinite(e.weight)) {
      throw std::invalid_argument("WeightedGraph: edge " + std::to_string(idx + 1) +
                                  " has a zero or non-finite weight");
    }
    if (!seen.emplace(e.u, e.v).second) {
      throw std::invalid_argument("WeightedGraph: duplicate edge {" + std::to_string(e.u + 1) +
                                  "," + std::to_string(e.v + 1) + "}");
    }
    if (!e.is_loop()) {
      incident_[e.u].push_back(idx);
      incident_[e.v].push_back(idx);
    }
  }
}

std::optional<std::size_t> WeightedGraph::find_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
    if (edges_[idx].u == a && edges_[idx].v == b) return idx;
  }
  return std::nullopt;
}

bool WeightedGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

WeightedGraph WeightedGraph::without_loops() const {
  std::vector<Edge> kept;
  std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(kept),
               [](const Edge& e) { return !e.is_loop(); });
  return WeightedGraph(n_, std::move(kept));
}

std::size_t WeightedGraph::degree(Vertex v) const { return incident_.at(v).size(); }

bool WeightedGraph::is_connected() const { return vertex_components().size() <= 1; }

std::vector<VertexSet> WeightedGraph::vertex_components() const {
  detail::DisjointSets dsu(n_);
  for (const Edge& e : edges_) dsu.unite(e.u, e.v);
  std::map<std::size_t, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < n_; ++v) groups[dsu.find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [root, members] : groups) out.emplace_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  return out;
}

EdgeSubset::EdgeSubset(const WeightedGraph& host, std::vector<std::size_t> members)
    : host_(&host), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= host.edge_count())
    throw std::out_of_range("EdgeSubset: edge index outside the host graph");
}

bool EdgeSubset::contains(std::size_t edge_index) const {
  return std::binary_search(members_.begin(), members_.end(), edge_index);
}

double EdgeSubset::weight() const {
  double w = 1.0;
  for (std::size_t idx : members_) w *= host_->edge(idx).weight;
  return w;
}

VertexSet EdgeSubset::vertices() const {
  std::vector<Vertex> vs;
  for (std::size_t idx : members_) {
    vs.push_back(host_->edge(idx).u);
    vs.push_back(host_->edge(idx).v);
  }
  return VertexSet(std::move(vs));
}

std::vector<Edge> EdgeSubset::resolved() const {
  std::vector<Edge> out;
  out.reserve(members_.size());
  for (std::size_t idx : members_) out.push_back(host_->edge(idx));
  return out;
}

EdgeSubset EdgeSubset::set_union(const EdgeSubset& other) const {
  if (host_ != other.host_) throw std::invalid_argument("EdgeSubset: union across hosts");
  std::vector<std::size_t> merged(members_);
  merged.insert(merged.end(), other.members_.begin(), other.members_.end());
  return EdgeSubset(*host_, std::move(merged));
}

OrientedIncidence::OrientedIncidence(std::size_t rows, std::vector<std::size_t> edge_columns,
                                     std::vector<int> entries, std::vector<double> weights)
    : rows_(rows),
      edge_columns_(std::move(edge_columns)),
      entries_(std::move(entries)),
      weights_(std::move(weights)) {
  if (entries_.size() != rows_ * edge_columns_.size() || weights_.size() != edge_columns_.size())
    throw std::invalid_argument("OrientedIncidence: inconsistent shapes");
  for (std::size_t c = 0; c < cols(); ++c) {
    int plus = 0;
    int minus = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const int x = (*this)(r, c);
      if (x == 1) ++plus;
      else if (x == -1) ++minus;
      else if (x != 0) throw std::invalid_argument("OrientedIncidence: entry outside {-1,0,1}");
    }
    if (plus != 1 || minus != 1)
      throw std::invalid_argument("OrientedIncidence: column without exactly one +1 and one -1");
  }
}

std::optional<std::size_t> OrientedIncidence::column_of_edge(std::size_t edge_index) const {
  auto it = std::lower_bound(edge_columns_.begin(), edge_columns_.end(), edge_index);
  if (it == edge_columns_.end() || *it != edge_index) return std::nullopt;
  return static_cast<std::size_t>(it - edge_columns_.begin());
}

DenseMatrix OrientedIncidence::incidence() const {
  DenseMatrix m(rows_, cols());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols(); ++c) m(r, c) = (*this)(r, c);
  return m;
}

DenseMatrix OrientedIncidence::weight_matrix() const {
  DenseMatrix w(cols(), cols());
  for (std::size_t c = 0; c < cols(); ++c) w(c, c) = weights_[c];
  return w;
}

SymmetricMatrix OrientedIncidence::product() const {
  const DenseMatrix m = incidence();
  const DenseMatrix p = m * weight_matrix() * m.transpose();
  SymmetricMatrix out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < rows_; ++j) out.set(i, j, p(i, j));
  return out;
}

SymmetricMatrix adjacency(const WeightedGraph& g) {
  SymmetricMatrix a(g.vertex_count());
  for (const Edge& e : g.edges()) a.set(e.u, e.v, e.weight);
  return a;
}

SymmetricMatrix laplacian(const WeightedGraph& g) {
  SymmetricMatrix l(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    l.set(e.u, e.v, -e.weight);
    l.add(e.u, e.u, e.weight);
    l.add(e.v, e.v, e.weight);
  }
  return l;
}

WeightedGraph coates_graph(const SymmetricMatrix& a, double zero_tolerance) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) {
      const double x = a(i, j);
      if (std::abs(x) > zero_tolerance) edges.push_back({i, j, x});
    }
  return WeightedGraph(a.size(), std::move(edges));
}

bool negated_adjacency_check(const SymmetricMatrix& a) { return a.has_zero_row_sums(); }

OrientedIncidence incidence_factorization(const WeightedGraph& g) {
  std::vector<std::size_t> columns;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx)
    if (!g.edge(idx).is_loop()) columns.push_back(idx);
  const std::size_t n = g.vertex_count();
  std::vector<int> entries(n * columns.size(), 0);
  std::vector<double> weights;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const Edge& e = g.edge(columns[c]);
    entries[e.u * columns.size() + c] = 1;
    entries[e.v * columns.size() + c] = -1;
    weights.push_back(e.weight);
  }
  return OrientedIncidence(n, std::move(columns), std::move(entries), std::move(weights));
}

std::vector<VertexSet> connected_components(const EdgeSubset& k) {
  const WeightedGraph& g = k.host();
  detail::DisjointSets dsu(g.vertex_count());
  for (std::size_t idx : k.members()) dsu.unite(g.edge(idx).u, g.edge(idx).v);
  std::map<std::size_t, std::vector<Vertex>> groups;
  for (Vertex v : k.vertices()) groups[dsu.find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [root, members] : groups) out.emplace_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  return out;
}

bool is_forest(const EdgeSubset& k) {
  const WeightedGraph& g = k.host();
  detail::DisjointSets dsu(g.vertex_count());
  for (std::size_t idx : k.members()) {
    if (!dsu.unite(g.edge(idx).u, g.edge(idx).v)) return false;  // loops land here too
  }
  return true;
}

EdgeSubset cut_edges(const WeightedGraph& g, const VertexSet& v1) {
  if (v1.empty() || v1.size() >= g.vertex_count() || v1.max() >= g.vertex_count())
    throw std::invalid_argument("cut_edges: V1 must be a nonempty proper subset of the vertices");
  std::vector<std::size_t> members;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const Edge& e = g.edge(idx);
    if (v1.contains(e.u) != v1.contains(e.v)) members.push_back(idx);
  }
  return EdgeSubset(g, std::move(members));
}

std::optional<std::vector<Vertex>> induced_line_path(const EdgeSubset& h) {
  const WeightedGraph& g = h.host();
  if (h.size() < 2) return std::nullopt;
  std::map<Vertex, std::vector<std::size_t>> local;
  for (std::size_t idx : h.members()) {
    const Edge& e = g.edge(idx);
    if (e.is_loop()) return std::nullopt;
    local[e.u].push_back(idx);
    local[e.v].push_back(idx);
  }
  if (local.size() != h.size() + 1) return std::nullopt;
  std::vector<Vertex> ends;
  for (const auto& [v, inc] : local) {
    if (inc.size() == 1) ends.push_back(v);
    else if (inc.size() != 2 || g.degree(v) != 2) return std::nullopt;
  }
  if (ends.size() != 2 || g.find_edge(ends[0], ends[1])) return std::nullopt;
  std::vector<Vertex> path{ends[0]};
  std::size_t via = local[ends[0]].front();
  while (path.size() <= h.size()) {
    const Vertex next = g.edge(via).other(path.back());
    path.push_back(next);
    const auto& inc = local[next];
    if (inc.size() == 1) break;
    via = inc[0] == via ? inc[1] : inc[0];
  }
  // a cycle component plus a separate path would leave vertices unvisited
  if (path.size() != h.size() + 1 || path.back() != ends[1]) return std::nullopt;
  return path;
}

namespace {

std::size_t other_incident(const WeightedGraph& g, Vertex v, std::size_t not_this) {
  const auto& inc = g.incident_edges(v);
  return inc[0] == not_this ? inc[1] : inc[0];
}

}  // namespace

std::vector<EdgeSubset> induced_lines(const WeightedGraph& g) {
  std::set<std::vector<std::size_t>> found;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    for (std::size_t first : g.incident_edges(start)) {
      std::vector<Vertex> path{start, g.edge(first).other(start)};
      std::vector<std::size_t> used{first};
      // Walk through degree-2 vertices for as long as the path stays induced.
      while (g.degree(path.back()) == 2) {
        const std::size_t e = other_incident(g, path.back(), used.back());
        const Vertex w = g.edge(e).other(path.back());
        if (std::find(path.begin(), path.end(), w) != path.end()) break;
        if (g.find_edge(start, w)) break;
        path.push_back(w);
        used.push_back(e);
      }
      if (used.size() < 2) continue;
      // Keep the walk only if it cannot be prolonged past its start either.
      if (g.degree(start) == 2) {
        const std::size_t e = other_incident(g, start, used.front());
        const Vertex w = g.edge(e).other(start);
        const bool extendable = std::find(path.begin(), path.end(), w) == path.end() &&
                                !g.find_edge(w, path.back());
        if (extendable) continue;
      }
      std::sort(used.begin(), used.end());
      found.insert(std::move(used));
    }
  }
  std::vector<EdgeSubset> lines;
  for (const auto& members : found) lines.emplace_back(g, members);
  return lines;
}

}  // namespace mesostab
