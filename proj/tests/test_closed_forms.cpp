#include <catch2/catch_amalgamated.hpp>

#include "resistor/closed_forms.hpp"
#include "resistor/forests.hpp"
#include "resistor/solvers.hpp"

using namespace resistor;

TEST_CASE("fibonacci") {
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(10) == 55);
  CHECK(fib(-1) == 1);
  CHECK(fib(-2) == -1);
  CHECK(fib(-5) == 5);
  for (long k = -8; k <= 8; ++k) REQUIRE(fib(k + 2) == fib(k + 1) + fib(k));
}

TEST_CASE("straight 2-tree closed form") {
  for (int n : {5, 9, 14})
    CHECK(straight_2tree_resistance(n, n - 1, n) == Rat(fib(2 * n - 3), fib(2 * n - 2)));

  for (int n : {4, 12}) {
    auto g = families::straight_2tree<Rat>(n);
    GroundedInverse<Rat> gi(g, 0);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        REQUIRE(straight_2tree_resistance(n, u, v) == gi.resistance(u - 1, v - 1));
  }
  CHECK_THROWS_AS(straight_2tree_resistance(6, 3, 3), std::invalid_argument);
}

TEST_CASE("straight 2-tree reversal symmetry") {
  const int n = 9;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      REQUIRE(straight_2tree_resistance(n, u, v) ==
              straight_2tree_resistance(n, n + 1 - v, n + 1 - u));
}

TEST_CASE("bent 2-tree closed form") {
  // zero bends reduces to the straight formula
  CHECK(bent_2tree_resistance(8, {}, 2, 7) == straight_2tree_resistance(8, 2, 7));

  auto gate = [](int n, std::vector<int> bends) {
    auto g = families::bent_2tree<Rat>(n, bends);
    GroundedInverse<Rat> gi(g, 0);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        REQUIRE(bent_2tree_resistance(n, bends, u, v) == gi.resistance(u - 1, v - 1));
  };
  gate(10, {5});
  gate(9, {4});
  gate(12, {5, 9});
  gate(12, {4, 6});
  gate(11, {5, 8});
  CHECK(bent_2tree_resistance(10, {5}, 3, 8) ==
        resistance_by_counts(families::bent_2tree<Rat>(10, {5}), 2, 7));
}

TEST_CASE("bent 2-tree spanning both bends") {
  const int n = 14;
  std::vector<int> bends{5, 9};
  auto g = families::bent_2tree<Rat>(n, bends);
  GroundedInverse<Rat> gi(g, 0);
  for (int u = 1; u <= 5; ++u)
    for (int v = 10; v <= n; ++v)
      REQUIRE(bent_2tree_resistance(n, bends, u, v) == gi.resistance(u - 1, v - 1));
}

TEST_CASE("fan formulas: printed hub fails, corrected passes") {
  // the printed form gives 1 at n=2 against the true 2/3
  CHECK(fan_hub_resistance(2, 1, /*as_printed=*/true) == Rat(1));
  CHECK(fan_hub_resistance(2, 1) == Rat(2, 3));
  CHECK(fan_hub_resistance(2, 1, true) != fan_hub_resistance(2, 1));
  CHECK(fan_hub_resistance(1, 1) == Rat(1));

  for (int n = 1; n <= 8; ++n) {
    auto g = families::fan_graph<Rat>(n);
    GroundedInverse<Rat> gi(g, 0);
    for (int i = 1; i <= n; ++i) {
      REQUIRE(fan_hub_resistance(n, i) == gi.resistance(i - 1, n));
      for (int j = i + 1; j <= n; ++j)
        REQUIRE(fan_resistance(n, i, j) == gi.resistance(i - 1, j - 1));
    }
  }
}

TEST_CASE("wheel formulas pass the oracle gate") {
  CHECK(wheel_hub_resistance(3) == Rat(1, 2));  // W_3 = K_4
  CHECK(wheel_resistance(3, 1, 2) == Rat(1, 2));

  for (int n = 3; n <= 10; ++n) {
    auto g = families::wheel_graph<Rat>(n);
    GroundedInverse<Rat> gi(g, 0);
    for (int i = 1; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 1; ++j)
        REQUIRE(wheel_resistance(n, i, j) == gi.resistance(i - 1, j - 1));
  }
}

TEST_CASE("flower formulas: printed interior case fails, corrected passes") {
  using FC = FlowerVertexClass;
  // F_4(K_3), both cut vertices, one petal apart
  CHECK(flower_resistance(4, 3, FC::CutSet, FC::CutSet, 1) == Rat(1, 2));

  // the printed neither-in-I case disagrees with the exact backend
  {
    const int n = 4, m = 3;
    auto g = families::complete_flower<Rat>(n, m);
    GroundedInverse<Rat> gi(g, 0);
    VertexId u = families::flower_interior_vertex(0, m);
    VertexId v = families::flower_interior_vertex(1, m);
    Rat exact = gi.resistance(u, v);
    CHECK(flower_resistance(n, m, FC::Interior, FC::Interior, 2, /*as_printed=*/true) != exact);
    CHECK(flower_resistance(n, m, FC::Interior, FC::Interior, 2) == exact);
  }

  // full gate across classes for several flowers
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {5, 3}, {4, 4}, {5, 4}}) {
    auto g = families::complete_flower<Rat>(n, m);
    GroundedInverse<Rat> gi(g, 0);
    auto classify = [&](VertexId x) {
      return x % (m - 1) == m - 2 ? FC::CutSet : FC::Interior;
    };
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v) {
        int d = flower_petal_separation(n, m, u, v);
        REQUIRE(flower_resistance(n, m, classify(u), classify(v), d) == gi.resistance(u, v));
      }
  }

  CHECK_THROWS_AS(flower_resistance(4, 3, FC::Interior, FC::Interior, 0), std::invalid_argument);
  CHECK_THROWS_AS(flower_resistance(2, 3, FC::CutSet, FC::CutSet, 1), std::invalid_argument);
}

TEST_CASE("ladder end resistances") {
  auto r3 = ladder_end_resistances(3);
  CHECK(r3.r_1_2 == Rat(11, 15));
  CHECK(r3.r_1_2nm1 == Rat(20, 15));
  CHECK(r3.r_1_2n == Rat(21, 15));
  auto r5 = ladder_end_resistances(5);
  CHECK(r5.r_1_2 == Rat(153, 209));
  CHECK(r5.r_1_2nm1 == Rat(494, 209));
  CHECK(r5.r_1_2n == Rat(495, 209));

  for (int n = 2; n <= 20; ++n) {
    auto ends = ladder_end_resistances(n);
    REQUIRE(std::abs(ladder_end_rung_resistance_closed_form(n) - to_double(ends.r_1_2)) < 1e-10);
  }
}

TEST_CASE("conjecture probe: straight 2-tree differences approach 1/5") {
  auto rows = conjecture_probe(1, 30);
  REQUIRE(rows.size() >= 20);
  double limit = 0.2;
  CHECK(std::abs(rows.back().difference - limit) < 1e-3);
  // the deviation magnitude settles monotonically over the trailing half
  for (std::size_t i = rows.size() / 2; i + 1 < rows.size(); ++i)
    REQUIRE(std::abs(rows[i + 1].difference - limit) <=
            std::abs(rows[i].difference - limit) + 1e-15);
}

TEST_CASE("conjecture probe: block tower differences approach 1/4") {
  auto rows = conjecture_probe(2, 12);
  CHECK(std::abs(rows.back().difference - 0.25) < 1e-3);
  for (std::size_t i = 2; i + 1 < rows.size(); ++i)
    REQUIRE(std::abs(rows[i + 1].difference - 0.25) <= std::abs(rows[i].difference - 0.25) + 1e-15);
}

TEST_CASE("conjecture probe: triangular grid rows carry the harmonic bound") {
  auto rows = conjecture_probe(4, 6);
  for (const auto& row : rows) {
    REQUIRE(row.value >= row.lower_bound - 1e-12);
  }
}

TEST_CASE("conjecture probe: grid exp-differences are reported") {
  auto rows = conjecture_probe(3, 6);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].difference > 0);
}
