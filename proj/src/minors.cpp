#include "mesostab/minors.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "disjoint_sets.hpp"

namespace mesostab {

namespace detail {

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) correction_ += (sum_ - t) + x;
  else correction_ += (x - t) + sum_;
  sum_ = t;
}

}  // namespace detail

double ForestFamily::weight() const {
  detail::CompensatedSum sum;
  for (const EdgeSubset& k : members) sum.add(k.weight());
  return sum.value();
}

double principal_minor_direct(const SymmetricMatrix& l, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("principal_minor_direct: S must be nonempty");
  if (s.max() >= l.size()) throw std::invalid_argument("principal_minor_direct: S outside 1..n");
  return determinant(l.principal_submatrix(s));
}

namespace {

void require_vertex_subset(const WeightedGraph& g, const VertexSet& s, const char* op) {
  if (s.empty()) throw std::invalid_argument(std::string(op) + ": S must be nonempty");
  if (s.max() >= g.vertex_count())
    throw std::invalid_argument(std::string(op) + ": S outside 1..n");
}

// Backtracking over edges in index order. A component "has a root" once it
// contains a vertex outside S. Starting from |S| rootless singletons (the
// vertices of S), every accepted edge must lower the rootless count by exactly
// one, so each step either attaches a rootless component to a rooted one or
// merges two rootless ones; closing a cycle or joining two rooted components
// can never be repaired and is cut off immediately.
class ForestEnumerator {
 public:
  ForestEnumerator(const WeightedGraph& g, const VertexSet& s,
                   const std::function<void(const std::vector<std::size_t>&)>& visit)
      : g_(g), target_(s.size()), visit_(visit) {
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx)
      if (!g.edge(idx).is_loop()) candidates_.push_back(idx);
    rooted_.assign(g.vertex_count(), 1);
    for (Vertex v : s) rooted_[v] = 0;
  }

  std::size_t run() {
    if (target_ <= candidates_.size()) {
      detail::DisjointSets dsu(g_.vertex_count());
      recurse(0, dsu, rooted_);
    }
    return count_;
  }

 private:
  void recurse(std::size_t next, detail::DisjointSets& dsu, const std::vector<char>& rooted) {
    if (chosen_.size() == target_) {
      ++count_;
      visit_(chosen_);
      return;
    }
    const std::size_t still_needed = target_ - chosen_.size();
    for (std::size_t pos = next; pos + still_needed <= candidates_.size(); ++pos) {
      const std::size_t idx = candidates_[pos];
      const Edge& e = g_.edge(idx);
      const std::size_t ra = dsu.find(e.u);
      const std::size_t rb = dsu.find(e.v);
      if (ra == rb) continue;
      if (rooted[ra] && rooted[rb]) continue;
      detail::DisjointSets branch = dsu;
      branch.unite(ra, rb);
      std::vector<char> branch_rooted = rooted;
      branch_rooted[branch.find(ra)] = static_cast<char>(rooted[ra] || rooted[rb]);
      chosen_.push_back(idx);
      recurse(pos + 1, branch, branch_rooted);
      chosen_.pop_back();
    }
  }

  const WeightedGraph& g_;
  std::size_t target_;
  const std::function<void(const std::vector<std::size_t>&)>& visit_;
  std::vector<std::size_t> candidates_;
  std::vector<char> rooted_;
  std::vector<std::size_t> chosen_;
  std::size_t count_ = 0;
};

bool one_outside_vertex_per_tree(const EdgeSubset& k, const VertexSet& s) {
  for (const VertexSet& comp : connected_components(k)) {
    std::size_t outside = 0;
    for (Vertex v : comp) outside += s.contains(v) ? 0 : 1;
    if (outside != 1) return false;
  }
  return true;
}

}  // namespace

std::size_t for_each_forest(const WeightedGraph& g, const VertexSet& s,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
  require_vertex_subset(g, s, "for_each_forest");
  return ForestEnumerator(g, s, visit).run();
}

ForestFamily enumerate_forest_family(const WeightedGraph& g, const VertexSet& s) {
  ForestFamily family{s, {}};
  for_each_forest(g, s, [&](const std::vector<std::size_t>& members) {
    EdgeSubset k(g, members);
    if (!is_forest(k) || !one_outside_vertex_per_tree(k, s))
      throw std::logic_error("enumerate_forest_family: member violates the forest structure");
    family.members.push_back(std::move(k));
  });
  return family;
}

double principal_minor_combinatorial(const WeightedGraph& g, const VertexSet& s) {
  require_vertex_subset(g, s, "principal_minor_combinatorial");
  detail::CompensatedSum sum;
  for_each_forest(g, s, [&](const std::vector<std::size_t>& members) {
    double w = 1.0;
    for (std::size_t idx : members) w *= g.edge(idx).weight;
    sum.add(w);
  });
  return sum.value();
}

namespace {

// Bareiss fraction-free elimination; exact for integer input whose minors fit
// in 64 bits, which holds for totally unimodular incidence submatrices.
std::int64_t integer_determinant(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

int incidence_minor_magnitude(const OrientedIncidence& m, const VertexSet& s, const EdgeSubset& k) {
  if (s.size() != k.size())
    throw std::invalid_argument("incidence_minor_magnitude: |S| and |K| differ");
  if (!s.empty() && s.max() >= m.rows())
    throw std::invalid_argument("incidence_minor_magnitude: S outside 1..n");
  std::vector<std::size_t> columns;
  for (std::size_t idx : k.members()) {
    const auto col = m.column_of_edge(idx);
    if (!col) throw std::invalid_argument("incidence_minor_magnitude: K contains a loop");
    columns.push_back(*col);
  }
  std::vector<std::vector<std::int64_t>> sub(s.size(), std::vector<std::int64_t>(s.size()));
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < columns.size(); ++b) sub[a][b] = m(s[a], columns[b]);
  const std::int64_t det = integer_determinant(std::move(sub));
  if (det < -1 || det > 1)
    throw std::logic_error("incidence_minor_magnitude: incidence minor outside {-1,0,1}");
  return static_cast<int>(det < 0 ? -det : det);
}

double cauchy_binet_expand(const DenseMatrix& d, const DenseMatrix& e,
                           const std::vector<std::size_t>& rows_i,
                           const std::vector<std::size_t>& cols_j) {
  const std::size_t m = d.cols();
  const std::size_t r = rows_i.size();
  if (e.rows() != m) throw std::invalid_argument("cauchy_binet_expand: inner dimensions differ");
  if (r == 0 || r != cols_j.size() || r > m)
    throw std::invalid_argument("cauchy_binet_expand: need 0 < |I| = |J| <= m");
  detail::CompensatedSum sum;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    sum.add(determinant(d.submatrix(rows_i, pick)) * determinant(e.submatrix(pick, cols_j)));
    // next r-combination of {0..m-1}
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == m - r + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return sum.value();
}

}  // namespace mesostab
