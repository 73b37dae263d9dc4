#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "resistor/graph.hpp"
#include "resistor/matrix.hpp"

namespace resistor {

/*
 * Combinatorial ground-truth backend: spanning-tree and separating
 * 2-forest counts, by determinant (weighted matrix-tree) and by exhaustive
 * enumeration, and the resistance formula r(u,v) = F(u,v) / T.
 */

template <class S>
struct ForestCounts {
  S trees;       // T(G), weighted
  S separating;  // F_G(u,v) for the queried pair
};

/// det of L with row/column w deleted; independent of the choice of w.
template <class S>
S count_spanning_trees_det(const WeightedMultigraph<S>& g, VertexId w) {
  require_connected(g, "count_spanning_trees_det");
  auto L = build_laplacian(g);
  return determinant(L.minor_matrix(w, w));
}

template <class S>
S count_spanning_trees_det(const WeightedMultigraph<S>& g) {
  return count_spanning_trees_det(g, g.vertex_count() - 1);
}

/// det of L with rows/columns u and v deleted = F_G(u,v) (weighted).
template <class S>
S count_separating_2forests_det(const WeightedMultigraph<S>& g, VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("2-forest count: u == v");
  require_connected(g, "count_separating_2forests_det");
  auto L = build_laplacian(g);
  return determinant(L.minor_matrix2(u, u, v, v));
}

namespace detail {

constexpr std::size_t kEnumEdgeCap = 25;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

/// Visits every acyclic edge subset of size k; callback gets the union-find state.
template <class S, class Fn>
void for_each_forest(const WeightedMultigraph<S>& g, int k, Fn&& fn) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<int> chosen;
  // depth-first over edge indices with union-find copied per level (graphs are tiny)
  auto rec = [&](auto&& self, int start, UnionFind uf) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      fn(chosen, uf);
      return;
    }
    int need = k - static_cast<int>(chosen.size());
    for (int i = start; i + need <= m; ++i) {
      UnionFind next = uf;
      if (!next.unite(edges[i].u, edges[i].v)) continue;  // cycle
      chosen.push_back(i);
      self(self, i + 1, std::move(next));
      chosen.pop_back();
    }
  };
  rec(rec, 0, UnionFind(g.vertex_count()));
}

template <class S>
void require_unit_weights(const WeightedMultigraph<S>& g, const char* who) {
  for (const auto& e : g.edges())
    if (e.conductance != S(1))
      throw std::invalid_argument(std::string(who) + ": enumeration oracle requires unit weights");
}

}  // namespace detail

/// Brute-force spanning-tree count (unit weights, |E| capped).
template <class S>
BigInt count_spanning_trees_enum(const WeightedMultigraph<S>& g) {
  require_connected(g, "count_spanning_trees_enum");
  detail::require_unit_weights(g, "count_spanning_trees_enum");
  if (g.edge_count() > detail::kEnumEdgeCap)
    throw resource_error("count_spanning_trees_enum: edge count exceeds enumeration cap");
  BigInt count = 0;
  detail::for_each_forest(g, g.vertex_count() - 1, [&](const auto&, auto&) { ++count; });
  return count;
}

/// Brute-force separating 2-forest count (unit weights, |E| capped).
template <class S>
BigInt count_separating_2forests_enum(const WeightedMultigraph<S>& g, VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("2-forest count: u == v");
  require_connected(g, "count_separating_2forests_enum");
  detail::require_unit_weights(g, "count_separating_2forests_enum");
  if (g.edge_count() > detail::kEnumEdgeCap)
    throw resource_error("count_separating_2forests_enum: edge count exceeds enumeration cap");
  BigInt count = 0;
  detail::for_each_forest(g, g.vertex_count() - 2, [&](const auto&, auto& uf) {
    if (uf.find(u) != uf.find(v)) ++count;
  });
  return count;
}

template <class S>
ForestCounts<S> forest_counts(const WeightedMultigraph<S>& g, VertexId u, VertexId v) {
  return {count_spanning_trees_det(g), count_separating_2forests_det(g, u, v)};
}

/// r(u,v) = F_G(u,v) / T(G).
template <class S>
S resistance_by_counts(const WeightedMultigraph<S>& g, VertexId u, VertexId v) {
  auto c = forest_counts(g, u, v);
  return c.separating / c.trees;
}

/*
 * Ladder recurrence [T_n, V_n] = [[3,1],[2,1]] [T_{n-1}, V_{n-1}],
 * T_1 = V_1 = 1, where V_n counts the 2-forests separating the last rung.
 */
inline std::pair<BigInt, BigInt> ladder_count_recurrence(int n) {
  if (n < 1) throw std::invalid_argument("ladder_count_recurrence: n >= 1");
  BigInt T = 1, V = 1;
  for (int i = 2; i <= n; ++i) {
    BigInt T2 = 3 * T + V;
    BigInt V2 = 2 * T + V;
    T = T2;
    V = V2;
  }
  return {T, V};
}

/// Closed form T(L_n) = ((2+sqrt3)^n - (2-sqrt3)^n) / (2 sqrt3), float mode.
inline double ladder_tree_count_closed_form(int n) {
  const double s3 = std::sqrt(3.0);
  return (std::pow(2 + s3, n) - std::pow(2 - s3, n)) / (2 * s3);
}

/// Closed form r_{L_n}(1,2) = ((2+s)^n (s-1) + (2-s)^n (s+1)) / ((2+s)^n - (2-s)^n).
inline double ladder_end_rung_resistance_closed_form(int n) {
  const double s3 = std::sqrt(3.0);
  const double a = std::pow(2 + s3, n), b = std::pow(2 - s3, n);
  return (a * (s3 - 1) + b * (s3 + 1)) / (a - b);
}

struct LadderFiveSequence {
  BigInt F;       // F_{L_n}(1, 2n)
  BigInt F_tilde; // F_{L_n}(1, 2n-1)
  BigInt A;       // F_{L_n / (2n-1)(2n)}(1, merged)
  BigInt T;       // T(L_n)
  BigInt V;       // F_{L_n}(2n-1, 2n)
};

/// Iterates the printed 5x5 integer system from (4,3,2,4,3) at n = 2.
inline LadderFiveSequence ladder_five_sequence(int n) {
  if (n < 2) throw std::invalid_argument("ladder_five_sequence: n >= 2");
  LadderFiveSequence s{4, 3, 2, 4, 3};
  for (int i = 3; i <= n; ++i) {
    LadderFiveSequence t;
    t.F = 2 * s.F + s.F_tilde + s.A + 2 * s.T;
    t.F_tilde = s.F + 2 * s.F_tilde + s.A + 2 * s.T;
    t.A = s.F + s.F_tilde + s.A + s.T;
    t.T = 3 * s.T + s.V;
    t.V = 2 * s.T + s.V;
    s = t;
  }
  return s;
}

/*
 * 2-separation machinery. The separation is caller-supplied: vertex sets
 * overlap exactly in {i,j} and the edge lists partition E(G).
 */
template <class S>
struct TwoSeparation {
  VertexId i, j;                  // the 2-separator
  std::vector<VertexId> side1;    // V(G1), includes i and j
  std::vector<VertexId> side2;    // V(G2), includes i and j
  std::vector<int> side1_edges;   // indices into g.edges()
  std::vector<int> side2_edges;
};

template <class S>
void validate_separation(const WeightedMultigraph<S>& g, const TwoSeparation<S>& sep) {
  std::set<VertexId> s1(sep.side1.begin(), sep.side1.end());
  std::set<VertexId> s2(sep.side2.begin(), sep.side2.end());
  if (!s1.count(sep.i) || !s1.count(sep.j) || !s2.count(sep.i) || !s2.count(sep.j))
    throw std::invalid_argument("2-separation: separator must lie in both sides");
  std::vector<VertexId> inter;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(inter));
  if (inter.size() != 2) throw std::invalid_argument("2-separation: sides must meet in exactly {i,j}");
  if (static_cast<int>(s1.size() + s2.size()) - 2 != g.vertex_count())
    throw std::invalid_argument("2-separation: sides must cover V(G)");
  std::set<int> e1(sep.side1_edges.begin(), sep.side1_edges.end());
  std::set<int> e2(sep.side2_edges.begin(), sep.side2_edges.end());
  if (e1.size() + e2.size() != g.edge_count())
    throw std::invalid_argument("2-separation: edge lists must partition E(G)");
  for (int idx : sep.side1_edges)
    if (e2.count(idx)) throw std::invalid_argument("2-separation: edge lists must be disjoint");
  auto edge_in = [&](int idx, const std::set<VertexId>& side) {
    const auto& e = g.edges()[idx];
    return side.count(e.u) && side.count(e.v);
  };
  for (int idx : sep.side1_edges)
    if (!edge_in(idx, s1)) throw std::invalid_argument("2-separation: side1 edge leaves side1");
  for (int idx : sep.side2_edges)
    if (!edge_in(idx, s2)) throw std::invalid_argument("2-separation: side2 edge leaves side2");
}

template <class S>
struct TwoSwitchResult {
  WeightedMultigraph<S> graph;
  // label map: i and j trade places for side-2 queries (Thm on 2-switches)
  VertexId i, j;
};

/// Reglues G2 with the separator pair swapped; T(G) and side-internal resistances survive.
template <class S>
TwoSwitchResult<S> two_switch(const WeightedMultigraph<S>& g, const TwoSeparation<S>& sep) {
  validate_separation(g, sep);
  WeightedMultigraph<S> out(g.vertex_count());
  std::set<int> e2(sep.side2_edges.begin(), sep.side2_edges.end());
  for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
    const auto& e = g.edges()[idx];
    if (e2.count(idx)) {
      auto swap_id = [&](VertexId v) {
        if (v == sep.i) return sep.j;
        if (v == sep.j) return sep.i;
        return v;
      };
      out.add_edge(swap_id(e.u), swap_id(e.v), e.conductance);
    } else {
      out.add_edge(e.u, e.v, e.conductance);
    }
  }
  return {std::move(out), sep.i, sep.j};
}

namespace detail {

template <class S>
WeightedMultigraph<S> induced_side(const WeightedMultigraph<S>& g,
                                   const std::vector<VertexId>& verts,
                                   const std::vector<int>& edge_idx,
                                   std::vector<VertexId>& local_of) {
  std::vector<VertexId> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  local_of.assign(g.vertex_count(), -1);
  for (std::size_t k = 0; k < sorted.size(); ++k) local_of[sorted[k]] = static_cast<VertexId>(k);
  WeightedMultigraph<S> side(static_cast<int>(sorted.size()));
  for (int idx : edge_idx) {
    const auto& e = g.edges()[idx];
    side.add_edge(local_of[e.u], local_of[e.v], e.conductance);
  }
  return side;
}

/*
 * F_H(a, {b,c}): spanning 2-forests with a in one tree and b,c together in
 * the other. Every 2-forest splits {a,b,c} one of three ways, giving the
 * inclusion-exclusion below.
 */
template <class S>
S count_pair_separating(const WeightedMultigraph<S>& h, VertexId a, VertexId b, VertexId c) {
  S fab = count_separating_2forests_det(h, a, b);
  S fac = count_separating_2forests_det(h, a, c);
  S fbc = count_separating_2forests_det(h, b, c);
  return (fab + fac - fbc) / S(2);
}

}  // namespace detail

/// Five-product assembly of F_G(u,v) across a 2-separation, divided by T(G).
template <class S>
S resistance_across_separation(const WeightedMultigraph<S>& g, const TwoSeparation<S>& sep,
                               VertexId u, VertexId v) {
  validate_separation(g, sep);
  if (u == sep.i || u == sep.j || v == sep.i || v == sep.j)
    throw std::invalid_argument("resistance_across_separation: u,v must avoid the separator");
  std::vector<VertexId> loc1, loc2;
  auto g1 = detail::induced_side(g, sep.side1, sep.side1_edges, loc1);
  auto g2 = detail::induced_side(g, sep.side2, sep.side2_edges, loc2);
  if (loc1[u] < 0 || loc2[v] < 0)
    throw std::invalid_argument("resistance_across_separation: expected u in side1 and v in side2");
  VertexId u1 = loc1[u], i1 = loc1[sep.i], j1 = loc1[sep.j];
  VertexId v2 = loc2[v], i2 = loc2[sep.i], j2 = loc2[sep.j];

  S t1 = count_spanning_trees_det(g1);
  S t2 = count_spanning_trees_det(g2);
  auto c1 = contract_pair(g1, i1, j1);
  auto c2 = contract_pair(g2, i2, j2);
  S f1_merged = count_separating_2forests_det(c1.graph, c1.id_map[u1], c1.merged);
  S f2_merged = count_separating_2forests_det(c2.graph, c2.id_map[v2], c2.merged);
  S f1i = count_separating_2forests_det(g1, u1, i1);
  S f1j = count_separating_2forests_det(g1, u1, j1);
  S f2i = count_separating_2forests_det(g2, v2, i2);
  S f2j = count_separating_2forests_det(g2, v2, j2);
  S fp1 = detail::count_pair_separating(g1, u1, i1, j1);
  S fp2 = detail::count_pair_separating(g2, v2, i2, j2);

  S forests = f1_merged * t2 + f2_merged * t1 + f1i * f2j + f1j * f2i - S(2) * fp1 * fp2;
  return forests / count_spanning_trees_det(g);
}

}  // namespace resistor
