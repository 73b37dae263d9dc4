#pragma once

#include <utility>
#include <vector>

#include "resistor/families.hpp"
#include "resistor/graph.hpp"
#include "resistor/matrix.hpp"

namespace resistor {

/*
 * Single-edge perturbation backend: an all-pairs resistance matrix is
 * carried through edge-weight changes with the rank-one update
 *
 *   O'(p,q) = O(p,q) - d [O(p,i)+O(q,j)-O(p,j)-O(q,i)]^2 / (4 [1 + d O(i,j)]),
 *   d = w' - w.
 *
 * Works in both directions, including w = 0 (edge absent) and w' = 0
 * (edge deleted, provided the graph stays connected).
 */
template <class S>
struct OmegaMatrix {
  Matrix<S> omega;
  WeightedMultigraph<S> graph;  // companion snapshot

  int vertex_count() const { return graph.vertex_count(); }
  const S& operator()(VertexId p, VertexId q) const { return omega(p, q); }
};

template <class S>
OmegaMatrix<S> perturb_edge(const OmegaMatrix<S>& om, VertexId i, VertexId j, const S& w_old,
                            const S& w_new) {
  const int n = om.vertex_count();
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("perturb_edge: bad vertex pair");
  const S delta = w_new - w_old;

  // updated companion graph first, so connectivity can be checked up front
  WeightedMultigraph<S> g2(n);
  bool adjusted = false;
  for (const auto& e : om.graph.edges()) {
    if (!adjusted && ((e.u == i && e.v == j) || (e.u == j && e.v == i)) && e.conductance == w_old) {
      adjusted = true;
      if (w_new != S(0)) g2.add_edge(e.u, e.v, w_new);
      continue;
    }
    g2.add_edge(e.u, e.v, e.conductance);
  }
  if (!adjusted) {
    if (w_old != S(0)) throw std::invalid_argument("perturb_edge: no edge (i,j) with weight w_old");
    if (w_new != S(0)) g2.add_edge(i, j, w_new);
  }
  if (!check_connected(g2))
    throw disconnected_error("perturb_edge: perturbation disconnects the graph");

  if (delta == S(0)) return {om.omega, std::move(g2)};

  const S denom = S(1) + delta * om.omega(i, j);
  if (denom == S(0)) throw singular_error("perturb_edge: vanishing denominator 1 + delta*Omega(i,j)");

  Matrix<S> next(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      S bracket = om.omega(p, i) + om.omega(q, j) - om.omega(p, j) - om.omega(q, i);
      S upd = om.omega(p, q) - delta * bracket * bracket / (S(4) * denom);
      next(p, q) = next(q, p) = upd;
    }
  return {std::move(next), std::move(g2)};
}

/*
 * Exact Omega for the 2n-vertex path with the ladder-interleaved labeling
 * 1,3,5,...,2n-1,2n,2n-2,...,2:
 *   r(p,q) = |p-q|/2                 when p+q is even
 *   r(p,q) = 2n - floor((p+q)/2)     when p+q is odd
 */
template <class S>
OmegaMatrix<S> path_omega(int n) {
  if (n < 1) throw std::invalid_argument("path_omega: n >= 1");
  const int verts = 2 * n;
  Matrix<S> omega(verts, verts);
  for (int p = 1; p <= verts; ++p)
    for (int q = p + 1; q <= verts; ++q) {
      S r = ((p + q) % 2 == 0) ? S(q - p) / S(2) : S(2 * n - (p + q) / 2);
      omega(p - 1, q - 1) = omega(q - 1, p - 1) = r;
    }
  return {std::move(omega), families::path_graph<S>(verts, /*ladder_interleaved=*/true)};
}

template <class S>
struct IncrementalLadderResult {
  OmegaMatrix<S> omega;
  BigInt tracked_single_pair;  // (5n^2+5n)/2 bookkeeping figure for a single-pair query
};

/*
 * Builds Omega(L_n) from the labeled path by switching each missing rung
 * (1,2),(3,4),...,(2n-3,2n-2) from weight 0 to 1.
 */
template <class S>
IncrementalLadderResult<S> build_ladder_incrementally(int n) {
  if (n < 2) throw std::invalid_argument("build_ladder_incrementally: n >= 2");
  auto om = path_omega<S>(n);
  for (int k = 1; k <= 2 * n - 3; k += 2) {
    // add the placeholder edge, then raise its weight: 0 -> 1
    WeightedMultigraph<S> with_placeholder = om.graph;
    with_placeholder.add_edge(k - 1, k, S(0));
    om.graph = std::move(with_placeholder);
    om = perturb_edge(om, k - 1, k, S(0), S(1));
  }
  BigInt tracked = (BigInt(5) * n * n + BigInt(5) * n) / 2;
  return {std::move(om), tracked};
}

/// Resistance backend built on perturbations: spanning tree first, then the rest.
template <class S>
Matrix<S> resistance_matrix_incremental(const WeightedMultigraph<S>& g) {
  require_connected(g, "resistance_matrix_incremental");
  const int n = g.vertex_count();
  // pick a spanning tree by union-find over positive edges
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> extra_edges;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const auto& e = g.edges()[idx];
    if (!(e.conductance > S(0))) continue;
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      tree_edges.push_back(idx);
    } else {
      extra_edges.push_back(idx);
    }
  }
  // tree resistances: sum of 1/w along the unique path, via BFS from each vertex
  WeightedMultigraph<S> tree(n);
  for (auto idx : tree_edges) {
    const auto& e = g.edges()[idx];
    tree.add_edge(e.u, e.v, e.conductance);
  }
  Matrix<S> omega(n, n);
  std::vector<std::vector<std::pair<int, S>>> adj(n);
  for (const auto& e : tree.edges()) {
    adj[e.u].emplace_back(e.v, S(1) / e.conductance);
    adj[e.v].emplace_back(e.u, S(1) / e.conductance);
  }
  for (int s = 0; s < n; ++s) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto& [y, r] : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          omega(s, y) = omega(s, x) + r;
          stack.push_back(y);
        }
    }
  }
  OmegaMatrix<S> om{std::move(omega), std::move(tree)};
  for (auto idx : extra_edges) {
    const auto& e = g.edges()[idx];
    WeightedMultigraph<S> with_placeholder = om.graph;
    with_placeholder.add_edge(e.u, e.v, S(0));
    om.graph = std::move(with_placeholder);
    om = perturb_edge(om, e.u, e.v, S(0), e.conductance);
  }
  return om.omega;
}

template <class S>
S resistance_incremental(const WeightedMultigraph<S>& g, VertexId u, VertexId v) {
  return resistance_matrix_incremental(g)(u, v);
}

}  // namespace resistor
