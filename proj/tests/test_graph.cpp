#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mesostab/graph.hpp"
#include "mesostab/matrix.hpp"
#include "support/oracles.hpp"

using namespace mesostab;

namespace {

// Four-vertex signed example: edges {1,2}:1/2, {1,4}:-3, {2,3}:1, {2,4}:-2, {3,4}:1.
SymmetricMatrix signed_adjacency() {
  return SymmetricMatrix::from_rows(
      {{0, 0.5, 0, -3}, {0.5, 0, 1, -2}, {0, 1, 0, 1}, {-3, -2, 1, 0}});
}

SymmetricMatrix signed_laplacian() {
  return SymmetricMatrix::from_rows({{-2.5, -0.5, 0, 3},
                                     {-0.5, -0.5, -1, 2},
                                     {0, -1, 2, -1},
                                     {3, 2, -1, -4}});
}

SymmetricMatrix indefinite_c() {
  return SymmetricMatrix::from_rows({{0, 0, 1, -1}, {0, -1, 1, 0}, {1, 1, -2, 0}, {-1, 0, 0, 1}});
}

WeightedGraph triangle(double a = 1, double b = 1, double c = 1) {
  return WeightedGraph(3, {{0, 1, a}, {0, 2, b}, {1, 2, c}});
}

WeightedGraph path(const std::vector<double>& w) {
  std::vector<Edge> e;
  for (std::size_t k = 0; k < w.size(); ++k) e.push_back({k, k + 1, w[k]});
  return WeightedGraph(w.size() + 1, e);
}

}  // namespace

TEST_CASE("graph construction validates its invariants") {
  CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph(2, {{0, 2, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, 1.0}, {1, 0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, std::nan("")}}), std::invalid_argument);

  const WeightedGraph g(3, {{2, 0, 1.5}, {1, 1, -1.0}});
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 2);
  CHECK(g.has_loops());
  CHECK(g.degree(1) == 0);
  CHECK(g.without_loops().edge_count() == 1);
}

TEST_CASE("symmetric matrices reject asymmetric or non-finite input") {
  CHECK_THROWS_AS(SymmetricMatrix::from_rows({{1, 2}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricMatrix::from_rows({{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricMatrix::from_rows({{INFINITY}}), std::invalid_argument);
}

TEST_CASE("coates graph") {
  SUBCASE("signed four-vertex adjacency") {
    const WeightedGraph g = coates_graph(signed_adjacency());
    REQUIRE(g.edge_count() == 5);
    const std::vector<Edge> expect = {
        {0, 1, 0.5}, {0, 3, -3}, {1, 2, 1}, {1, 3, -2}, {2, 3, 1}};
    CHECK(g.edges() == expect);
  }
  SUBCASE("zero matrix has no edges") {
    const WeightedGraph g = coates_graph(SymmetricMatrix(3));
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("diagonal entries become loops") {
    const WeightedGraph g = coates_graph(indefinite_c());
    const std::vector<Edge> expect = {{0, 2, 1}, {0, 3, -1}, {1, 1, -1},
                                      {1, 2, 1}, {2, 2, -2}, {3, 3, 1}};
    CHECK(g.edges() == expect);
  }
  SUBCASE("computed matrices use an absolute cutoff") {
    SymmetricMatrix a(2);
    a.set(0, 1, 1e-14);
    CHECK(coates_graph(a).edge_count() == 1);
    CHECK(coates_graph(a, kComputedZeroTolerance).edge_count() == 0);
  }
}

TEST_CASE("laplacian") {
  SUBCASE("signed example reproduces the printed matrix exactly") {
    CHECK(laplacian(coates_graph(signed_adjacency())) == signed_laplacian());
  }
  SUBCASE("graph without edges") {
    CHECK(laplacian(WeightedGraph(3, {})) == SymmetricMatrix(3));
  }
  SUBCASE("loops are dropped") {
    const WeightedGraph g(2, {{0, 0, 5.0}, {0, 1, 2.0}});
    CHECK(laplacian(g) == SymmetricMatrix::from_rows({{2, -2}, {-2, 2}}));
  }
  SUBCASE("random graphs have zero row sums and match the edge-list oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
      const auto g = oracle::random_graph(rng, 2 + t % 7, 15,
                                          [](auto& r) { return oracle::nonzero_int_weight(r, 5); });
      const SymmetricMatrix l = laplacian(g);
      CHECK(l.has_zero_row_sums());
      CHECK(oracle::to_rows(l) == oracle::laplacian(g));
    }
  }
}

TEST_CASE("negated adjacency check") {
  CHECK(negated_adjacency_check(-signed_laplacian()));
  CHECK_FALSE(negated_adjacency_check(SymmetricMatrix::identity(2)));
  CHECK(negated_adjacency_check(indefinite_c()));
}

TEST_CASE("coates graph round trip for zero-row-sum matrices") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const SymmetricMatrix a = oracle::random_zero_row_sum(rng, 2 + t % 6);
    const SymmetricMatrix l = laplacian(coates_graph(a));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (i != j) CHECK(l(i, j) == -a(i, j));
        else CHECK(std::abs(l(i, i) + a(i, i)) <= a.row_sum_tolerance());
      }
  }
}

TEST_CASE("incidence factorization") {
  SUBCASE("orientation is +1 at the smaller vertex") {
    const auto m = incidence_factorization(triangle());
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 3);
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 0) == -1);
    CHECK(m(2, 0) == 0);
    CHECK(m.product() == SymmetricMatrix::from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  }
  SUBCASE("single edge") {
    const auto m = incidence_factorization(WeightedGraph(2, {{0, 1, 2.5}}));
    CHECK(m.product() == SymmetricMatrix::from_rows({{2.5, -2.5}, {-2.5, 2.5}}));
  }
  SUBCASE("signed example") {
    CHECK(incidence_factorization(coates_graph(signed_adjacency())).product() ==
          signed_laplacian());
  }
  SUBCASE("loops get no column") {
    const WeightedGraph g(2, {{0, 0, 3.0}, {0, 1, 1.0}});
    const auto m = incidence_factorization(g);
    CHECK(m.cols() == 1);
    CHECK(m.edge_of_column(0) == 1);
    CHECK_FALSE(m.column_of_edge(0).has_value());
  }
  SUBCASE("random graphs: M W M^T equals L") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
      const auto g = oracle::random_graph(rng, 2 + t % 7, 14, [](auto& r) {
        return std::uniform_real_distribution<double>(-2, 2)(r) + 2.5;
      });
      const auto prod = incidence_factorization(g).product();
      const auto l = laplacian(g);
      for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < l.size(); ++j)
          CHECK(std::abs(prod(i, j) - l(i, j)) <= 1e-9 * (1 + l.max_abs()));
    }
  }
}

TEST_CASE("connected components of an edge subset") {
  const WeightedGraph g(5, {{0, 1, 1}, {2, 3, 1}, {3, 4, 1}});
  CHECK(connected_components(EdgeSubset(g)).empty());
  CHECK(connected_components(EdgeSubset(g, {0})) == std::vector<VertexSet>{{0, 1}});
  CHECK(connected_components(EdgeSubset(g, {0, 1})) ==
        std::vector<VertexSet>{{0, 1}, {2, 3}});
}

TEST_CASE("is_forest") {
  const WeightedGraph t = triangle();
  CHECK(is_forest(EdgeSubset(t)));
  CHECK_FALSE(is_forest(EdgeSubset(t, {0, 1, 2})));
  CHECK(is_forest(EdgeSubset(t, {0, 2})));

  SUBCASE("agrees with a brute-force cycle search on every subset") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
      const auto g = oracle::random_graph(rng, 3 + t % 4, 6, [](auto&) { return 1.0; });
      const std::size_t m = g.edge_count();
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<std::size_t> k;
        for (std::size_t i = 0; i < m; ++i)
          if ((mask >> i) & 1U) k.push_back(i);
        CHECK(is_forest(EdgeSubset(g, k)) == !oracle::has_cycle(g, k));
      }
    }
  }
}

TEST_CASE("cut edges") {
  SUBCASE("triangle") {
    const WeightedGraph t = triangle();
    CHECK(cut_edges(t, {0}).members() == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("path, split ends") {
    const WeightedGraph p = path({1, 1});
    CHECK(cut_edges(p, {0, 2}).members() == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("signed example, V1 = {1,2}") {
    const WeightedGraph g = coates_graph(signed_adjacency());
    const auto cut = cut_edges(g, {0, 1}).resolved();
    const std::vector<Edge> expect = {{0, 3, -3}, {1, 2, 1}, {1, 3, -2}};
    CHECK(cut == expect);
  }
  SUBCASE("symmetric under complement") {
    const WeightedGraph g = coates_graph(signed_adjacency());
    for (std::size_t mask = 1; mask < 15; ++mask) {
      const VertexSet v1 = VertexSet::from_mask(mask);
      CHECK(cut_edges(g, v1) == cut_edges(g, v1.complement(4)));
    }
  }
  SUBCASE("invalid partitions") {
    const WeightedGraph t = triangle();
    CHECK_THROWS_AS(cut_edges(t, {}), std::invalid_argument);
    CHECK_THROWS_AS(cut_edges(t, {0, 1, 2}), std::invalid_argument);
  }
}

TEST_CASE("induced lines") {
  SUBCASE("path on four vertices is one line") {
    const WeightedGraph p = path({1, 2, 3});
    const auto lines = induced_lines(p);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].members() == std::vector<std::size_t>{0, 1, 2});
    CHECK(*induced_line_path(lines[0]) == std::vector<Vertex>{0, 1, 2, 3});
  }
  SUBCASE("triangle has none") { CHECK(induced_lines(triangle()).empty()); }
  SUBCASE("star has none") {
    const WeightedGraph star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    CHECK(induced_lines(star).empty());
  }
  SUBCASE("a two-edge path is not a line when its ends are adjacent") {
    const WeightedGraph t = triangle();
    CHECK_FALSE(induced_line_path(EdgeSubset(t, {0, 2})).has_value());
  }
  SUBCASE("lines stop at branch vertices") {
    // 0-1-2-3 with a pendant edge 3-4 and 3-5: vertex 3 has degree 3
    const WeightedGraph g(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}});
    const auto lines = induced_lines(g);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].members() == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("long cycle yields lines through every vertex") {
    // hexagon: a 5-edge path would have adjacent ends, so lines stop at 4 edges
    std::vector<Edge> e;
    for (std::size_t k = 0; k < 6; ++k) e.push_back({k, (k + 1) % 6, 1.0});
    const WeightedGraph hex(6, e);
    const auto lines = induced_lines(hex);
    CHECK(lines.size() == 6);
    for (const auto& l : lines) CHECK(l.size() == 4);
  }
  SUBCASE("every reported line satisfies the definition") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 100; ++t) {
      const auto g = oracle::random_graph(rng, 4 + t % 5, 9, [](auto&) { return 1.0; });
      for (const auto& l : induced_lines(g)) {
        const auto p = induced_line_path(l);
        REQUIRE(p.has_value());
        CHECK(p->size() == l.size() + 1);
        for (std::size_t k = 1; k + 1 < p->size(); ++k) CHECK(g.degree((*p)[k]) == 2);
      }
    }
  }
}
