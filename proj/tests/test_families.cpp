#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "resistor/closed_forms.hpp"
#include "resistor/families.hpp"
#include "resistor/forests.hpp"
#include "resistor/solvers.hpp"

using namespace resistor;
using namespace resistor::families;

TEST_CASE("generator counts") {
  auto l3 = ladder_graph<Rat>(3);
  CHECK(l3.vertex_count() == 6);
  CHECK(l3.edge_count() == 7);
  // rungs (1,2),(3,4),(5,6)
  std::set<std::pair<int, int>> edges;
  for (const auto& e : l3.edges()) edges.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  CHECK(edges.count({0, 1}) == 1);
  CHECK(edges.count({2, 3}) == 1);
  CHECK(edges.count({4, 5}) == 1);

  auto s5 = straight_2tree<Rat>(5);
  CHECK(s5.vertex_count() == 5);
  CHECK(s5.edge_count() == 7);  // 2n-3

  auto t4 = triangular_grid<Rat>(4);
  CHECK(t4.vertex_count() == 15);
  CHECK(t4.edge_count() == 30);

  auto bt = block_tower<Rat>(5);
  CHECK(bt.vertex_count() == 20);
  CHECK(bt.edge_count() == 8 * 5 - 4);

  auto fl = complete_flower<Rat>(5, 4);
  CHECK(fl.vertex_count() == 5 * 3);
  CHECK(fl.edge_count() == 5 * 6);
}

TEST_CASE("straight 2-tree structure: chordal, no K4") {
  auto g = straight_2tree<Rat>(6);
  // no K4: every 4-subset misses an edge
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  auto adj = [&](int a, int b) { return edges.count({std::min(a, b), std::max(a, b)}) > 0; };
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d) {
          bool clique = adj(a, b) && adj(a, c) && adj(a, d) && adj(b, c) && adj(b, d) && adj(c, d);
          REQUIRE_FALSE(clique);
        }
  // degree profile (2,3,4,...,4,3,2)
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(2) == 4);
  CHECK(g.degree(3) == 4);
  CHECK(g.degree(4) == 3);
  CHECK(g.degree(5) == 2);
}

TEST_CASE("degree profile checks") {
  std::string why;
  CHECK(degree_profile_check(linear_k_tree<Rat>(8, 3), FamilySpec{LinearKTree{8, 3}}, &why));
  CHECK(degree_profile_check(bent_2tree<Rat>(10, {5}), FamilySpec{Bent2Tree{10, {5}}}, &why));
  CHECK(degree_profile_check(straight_2tree<Rat>(6), FamilySpec{Straight2Tree{6}}, &why));
  CHECK(degree_profile_check(wheel_graph<Rat>(6), FamilySpec{Wheel{6}}, &why));
  // a wrong graph against the spec fails with a diagnostic
  CHECK_FALSE(degree_profile_check(straight_2tree<Rat>(7), FamilySpec{LinearKTree{7, 3}}, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("all families are connected with declared counts") {
  std::vector<FamilySpec> specs = {
      Path{7},      Cycle{6},          Ladder{5},     Fan{6},           Wheel{6},
      Straight2Tree{8}, Bent2Tree{10, {5}}, LinearKTree{9, 3}, CompleteFlower{4, 3},
      TriangularGrid{3}, Grid{3, 4},   BlockTower{4}};
  for (const auto& spec : specs) {
    auto g = generate<Rat>(spec);
    REQUIRE(check_connected(g));
    REQUIRE(degree_profile_check(g, spec));
  }
  CHECK(generate<Rat>(FamilySpec{TriangularGrid{4}}).vertex_count() == 15);
}

TEST_CASE("straight 2-tree spanning trees are Fibonacci") {
  for (int n = 3; n <= 12; ++n)
    CHECK(count_spanning_trees_det(straight_2tree<Rat>(n)) == Rat(fib(2 * n - 2)));
}

TEST_CASE("interleaved path labeling") {
  auto g = path_graph<Rat>(6, /*ladder_interleaved=*/true);
  // order 1,3,5,6,4,2: consecutive pairs are edges
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  CHECK(edges.count({0, 2}) == 1);
  CHECK(edges.count({2, 4}) == 1);
  CHECK(edges.count({4, 5}) == 1);
  CHECK(edges.count({3, 5}) == 1);
  CHECK(edges.count({1, 3}) == 1);
}

TEST_CASE("invalid parameters are rejected by name") {
  CHECK_THROWS_AS(cycle_graph<Rat>(2), std::invalid_argument);
  CHECK_THROWS_AS(wheel_graph<Rat>(2), std::invalid_argument);
  CHECK_THROWS_AS(complete_flower<Rat>(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(complete_flower<Rat>(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(bent_2tree<Rat>(10, {2}), std::invalid_argument);
  CHECK_THROWS_AS(bent_2tree<Rat>(10, {9}), std::invalid_argument);
  CHECK_THROWS_AS(linear_k_tree<Rat>(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(triangular_grid<Rat>(0), std::invalid_argument);
  CHECK_THROWS_AS(path_graph<Rat>(5, true), std::invalid_argument);
}

TEST_CASE("cartesian product structure") {
  auto grid = grid_graph<Rat>(3, 4);
  CHECK(grid.vertex_count() == 12);
  CHECK(grid.edge_count() == 3 * 3 + 2 * 4);  // 3 rows of P4 edges + 4 columns of P3 edges
  REQUIRE(check_connected(grid));

  // product resistance sanity: P2 box P2 = C4
  auto c4ish = grid_graph<Rat>(2, 2);
  CHECK(c4ish.edge_count() == 4);
  CHECK(resistance_by_counts(c4ish, 0, 3) == Rat(1));
}

TEST_CASE("generalized flower wraps around") {
  // triangle base, marked (2, 0): same as the complete flower on K3
  auto base = complete_graph<Rat>(3);
  auto fl = generalized_flower(base, 2, 0, 4);
  auto direct = complete_flower<Rat>(4, 3);
  REQUIRE(fl.vertex_count() == direct.vertex_count());
  REQUIRE(fl.edge_count() == direct.edge_count());
  GroundedInverse<Rat> a(fl, 0), b(direct, 0);
  for (int u = 0; u < fl.vertex_count(); ++u)
    for (int v = u + 1; v < fl.vertex_count(); ++v)
      REQUIRE(a.resistance(u, v) == b.resistance(u, v));
}
