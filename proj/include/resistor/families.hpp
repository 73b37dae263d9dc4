#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "resistor/graph.hpp"

namespace resistor {
namespace families {

/*
 * Deterministic generators for the named graph families, all unit weight,
 * with the conventional vertex labelings:
 *
 *   Ladder(n)          2n vertices, odd ids on one rail; rungs (1,2),(3,4),...
 *   Straight2Tree(n)   path 1..n plus all distance-2 chords
 *   Fan(n)             path 1..n plus hub n+1
 *   Wheel(n)           cycle 1..n plus hub n+1
 *   Bent2Tree(n,bends) straight 2-tree rewired at each bend k:
 *                      edge (k,k+2) replaced by (k-1,k+2)
 *   LinearKTree(n,k)   banded adjacency: edge (i,j) iff |i-j| <= k
 *   CompleteFlower(n,m) ring of n copies of K_m sharing single vertices
 *   TriangularGrid(r)  r rows, (r+1)(r+2)/2 vertices, corners a (apex) and b
 *   Grid(m,n)          P_m box P_n
 *   BlockTower(n)      C_4 box P_n
 */

struct Path {
  int n;
  bool ladder_interleaved = false;  // order 1,3,...,2k-1,2k,...,2 instead of 1..n
};
struct Cycle { int n; };
struct Ladder { int n; };
struct Fan { int n; };
struct Wheel { int n; };
struct Straight2Tree { int n; };
struct Bent2Tree {
  int n;
  std::vector<int> bends;  // sorted bend vertices k, interior: 3 <= k <= n-2
};
struct LinearKTree {
  int n;
  int k;
};
struct CompleteFlower {
  int petals;  // n >= 3
  int m;       // clique order, >= 3
};
struct TriangularGrid { int rows; };
struct Grid { int m, n; };
struct BlockTower { int n; };

using FamilySpec = std::variant<Path, Cycle, Ladder, Fan, Wheel, Straight2Tree, Bent2Tree,
                                LinearKTree, CompleteFlower, TriangularGrid, Grid, BlockTower>;

template <class S>
WeightedMultigraph<S> path_graph(int n, bool ladder_interleaved = false) {
  if (n < 1) throw std::invalid_argument("path: n >= 1 required");
  WeightedMultigraph<S> g(n);
  if (!ladder_interleaved) {
    for (int i = 0; i + 1 < n; ++i) g.add_unit_edge(i, i + 1);
    return g;
  }
  if (n % 2 != 0) throw std::invalid_argument("interleaved path: even vertex count required");
  std::vector<int> order;
  for (int v = 1; v <= n; v += 2) order.push_back(v);
  for (int v = n; v >= 2; v -= 2) order.push_back(v);
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    g.add_unit_edge(order[i] - 1, order[i + 1] - 1);
  return g;
}

template <class S>
WeightedMultigraph<S> cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
  WeightedMultigraph<S> g(n);
  for (int i = 0; i < n; ++i) g.add_unit_edge(i, (i + 1) % n);
  return g;
}

template <class S>
WeightedMultigraph<S> complete_graph(int n) {
  WeightedMultigraph<S> g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_unit_edge(i, j);
  return g;
}

template <class S>
WeightedMultigraph<S> ladder_graph(int n) {
  if (n < 1) throw std::invalid_argument("ladder: n >= 1 required");
  WeightedMultigraph<S> g(2 * n);
  for (int i = 1; i <= n; ++i) g.add_unit_edge(2 * i - 2, 2 * i - 1);  // rung (2i-1,2i)
  for (int i = 1; i < n; ++i) {
    g.add_unit_edge(2 * i - 2, 2 * i);      // rail (2i-1, 2i+1)
    g.add_unit_edge(2 * i - 1, 2 * i + 1);  // rail (2i, 2i+2)
  }
  return g;
}

template <class S>
WeightedMultigraph<S> fan_graph(int n) {
  if (n < 1) throw std::invalid_argument("fan: n >= 1 required");
  WeightedMultigraph<S> g(n + 1);
  for (int i = 0; i + 1 < n; ++i) g.add_unit_edge(i, i + 1);
  for (int i = 0; i < n; ++i) g.add_unit_edge(i, n);  // hub is vertex n+1
  return g;
}

template <class S>
WeightedMultigraph<S> wheel_graph(int n) {
  if (n < 3) throw std::invalid_argument("wheel: n >= 3 required");
  WeightedMultigraph<S> g(n + 1);
  for (int i = 0; i < n; ++i) g.add_unit_edge(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) g.add_unit_edge(i, n);
  return g;
}

template <class S>
WeightedMultigraph<S> straight_2tree(int n) {
  if (n < 3) throw std::invalid_argument("straight 2-tree: n >= 3 required");
  WeightedMultigraph<S> g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_unit_edge(i, i + 1);
  for (int i = 0; i + 2 < n; ++i) g.add_unit_edge(i, i + 2);
  return g;
}

template <class S>
WeightedMultigraph<S> bent_2tree(int n, const std::vector<int>& bends) {
  auto sorted = bends;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int k = sorted[i];
    if (k < 3 || k > n - 2)
      throw std::invalid_argument("bent 2-tree: bend must be interior (3 <= k <= n-2)");
    if (i > 0 && sorted[i] - sorted[i - 1] < 2)
      throw std::invalid_argument("bent 2-tree: bends must be at least 2 apart");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  for (int i = 1; i + 2 <= n; ++i) edges.emplace_back(i, i + 2);
  for (int k : sorted) {
    std::erase(edges, std::make_pair(k, k + 2));
    edges.emplace_back(k - 1, k + 2);
  }
  WeightedMultigraph<S> g(n);
  for (auto [u, v] : edges) g.add_unit_edge(u - 1, v - 1);
  return g;
}

template <class S>
WeightedMultigraph<S> linear_k_tree(int n, int k) {
  if (k < 1 || n < k + 1) throw std::invalid_argument("linear k-tree: need n >= k+1, k >= 1");
  WeightedMultigraph<S> g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= std::min(n - 1, i + k); ++j) g.add_unit_edge(i, j);
  return g;
}

/*
 * F_n(G, x, y): n disjoint copies of the base, the marked x of each copy
 * identified with the marked y of the next copy around the ring.
 */
template <class S>
WeightedMultigraph<S> generalized_flower(const WeightedMultigraph<S>& base, VertexId x, VertexId y,
                                         int petals) {
  if (petals < 3) throw std::invalid_argument("flower: n >= 3 required");
  const int b = base.vertex_count();
  if (x == y || x < 0 || y < 0 || x >= b || y >= b)
    throw std::invalid_argument("flower: need two distinct marked vertices");
  // Copy i keeps all vertices except its y, which aliases copy i-1's x.
  const int per = b - 1;
  auto global_id = [&](int copy, VertexId v) -> VertexId {
    if (v == y) {
      int prev = (copy + petals - 1) % petals;
      return prev * per + (x < y ? x : x - 1);
    }
    return copy * per + (v < y ? v : v - 1);
  };
  WeightedMultigraph<S> g(petals * per);
  for (int c = 0; c < petals; ++c)
    for (const auto& e : base.edges()) g.add_edge(global_id(c, e.u), global_id(c, e.v), e.conductance);
  return g;
}

template <class S>
WeightedMultigraph<S> complete_flower(int petals, int m) {
  if (m < 3) throw std::invalid_argument("complete flower: m >= 3 required");
  return generalized_flower<S>(complete_graph<S>(m), m - 1, 0, petals);
}

/// Cut vertex shared by petals c and c+1 (mod n) in F_n(K_m) as built above.
inline VertexId flower_cut_vertex(int petal, int m) { return petal * (m - 1) + (m - 2); }
/// t-th interior (non-cut) vertex of petal c, 1 <= t <= m-2.
inline VertexId flower_interior_vertex(int petal, int m, int t = 1) {
  return petal * (m - 1) + (t - 1);
}

struct TriGridLayout {
  int rows = 0;
  VertexId apex = 0;          // corner a
  VertexId bottom_left = 0;   // corner b
  VertexId bottom_right = 0;
  int vid(int r, int j) const { return r * (r + 1) / 2 + j; }
};

template <class S>
WeightedMultigraph<S> triangular_grid(int rows, TriGridLayout* layout = nullptr) {
  if (rows < 1) throw std::invalid_argument("triangular grid: rows >= 1 required");
  TriGridLayout lay;
  lay.rows = rows;
  const int n = (rows + 1) * (rows + 2) / 2;
  WeightedMultigraph<S> g(n);
  for (int r = 0; r <= rows; ++r) {
    for (int j = 0; j < r; ++j) g.add_unit_edge(lay.vid(r, j), lay.vid(r, j + 1));
    if (r < rows)
      for (int j = 0; j <= r; ++j) {
        g.add_unit_edge(lay.vid(r, j), lay.vid(r + 1, j));
        g.add_unit_edge(lay.vid(r, j), lay.vid(r + 1, j + 1));
      }
  }
  lay.apex = lay.vid(0, 0);
  lay.bottom_left = lay.vid(rows, 0);
  lay.bottom_right = lay.vid(rows, rows);
  if (layout) *layout = lay;
  return g;
}

/// Cartesian product; vertex (u in g1, v in g2) gets id u * |V(g2)| + v.
template <class S>
WeightedMultigraph<S> cartesian_product(const WeightedMultigraph<S>& g1,
                                        const WeightedMultigraph<S>& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  WeightedMultigraph<S> g(n1 * n2);
  for (int u = 0; u < n1; ++u)
    for (const auto& e : g2.edges()) g.add_edge(u * n2 + e.u, u * n2 + e.v, e.conductance);
  for (const auto& e : g1.edges())
    for (int v = 0; v < n2; ++v) g.add_edge(e.u * n2 + v, e.v * n2 + v, e.conductance);
  return g;
}

template <class S>
WeightedMultigraph<S> grid_graph(int m, int n) {
  return cartesian_product(path_graph<S>(m), path_graph<S>(n));
}

/// C_4 box P_n; vertex (ring position i, level j) gets id j*4 + i.
template <class S>
WeightedMultigraph<S> block_tower(int n) {
  return cartesian_product(path_graph<S>(n), cycle_graph<S>(4));
}

template <class S>
WeightedMultigraph<S> generate(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> WeightedMultigraph<S> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Path>) return path_graph<S>(s.n, s.ladder_interleaved);
        else if constexpr (std::is_same_v<T, Cycle>) return cycle_graph<S>(s.n);
        else if constexpr (std::is_same_v<T, Ladder>) return ladder_graph<S>(s.n);
        else if constexpr (std::is_same_v<T, Fan>) return fan_graph<S>(s.n);
        else if constexpr (std::is_same_v<T, Wheel>) return wheel_graph<S>(s.n);
        else if constexpr (std::is_same_v<T, Straight2Tree>) return straight_2tree<S>(s.n);
        else if constexpr (std::is_same_v<T, Bent2Tree>) return bent_2tree<S>(s.n, s.bends);
        else if constexpr (std::is_same_v<T, LinearKTree>) return linear_k_tree<S>(s.n, s.k);
        else if constexpr (std::is_same_v<T, CompleteFlower>) return complete_flower<S>(s.petals, s.m);
        else if constexpr (std::is_same_v<T, TriangularGrid>) return triangular_grid<S>(s.rows);
        else if constexpr (std::is_same_v<T, Grid>) return grid_graph<S>(s.m, s.n);
        else return block_tower<S>(s.n);
      },
      spec);
}

/// Structural validation of the family's stated degree facts.
template <class S>
bool degree_profile_check(const WeightedMultigraph<S>& g, const FamilySpec& spec,
                          std::string* diagnostic = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (diagnostic) *diagnostic = msg;
    return false;
  };
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LinearKTree> || std::is_same_v<T, Straight2Tree>) {
          int k = 2;
          if constexpr (std::is_same_v<T, LinearKTree>) k = s.k;
          int count = 0;
          for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == k) ++count;
          if (count != 2)
            return fail("expected exactly two vertices of degree " + std::to_string(k) +
                        ", found " + std::to_string(count));
          return true;
        } else if constexpr (std::is_same_v<T, Bent2Tree>) {
          for (int k : s.bends) {
            if (g.degree(k - 1 - 1) != 5)
              return fail("bend " + std::to_string(k) + ": deg(k-1) != 5");
            if (g.degree(k - 1) != 3)
              return fail("bend " + std::to_string(k) + ": deg(k) != 3");
          }
          return true;
        } else if constexpr (std::is_same_v<T, Wheel>) {
          if (g.degree(s.n) != s.n) return fail("hub degree != n");
          return true;
        } else {
          (void)s;
          return true;
        }
      },
      spec);
}

}  // namespace families
}  // namespace resistor
