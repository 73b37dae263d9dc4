#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "resistor/families.hpp"
#include "resistor/graph.hpp"

namespace resistor {

/*
 * Equivalent-network rewriting. All rewrites preserve every pairwise
 * resistance among surviving vertices; that is the property the test
 * suite checks on every recorded step.
 */

enum class StepKind { Series, Parallel, DeltaY, YDelta, StarMesh, MeshStar, CutVertexSplit };

inline const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Series: return "series";
    case StepKind::Parallel: return "parallel";
    case StepKind::DeltaY: return "delta-y";
    case StepKind::YDelta: return "y-delta";
    case StepKind::StarMesh: return "star-mesh";
    case StepKind::MeshStar: return "mesh-star";
    case StepKind::CutVertexSplit: return "cut-split";
  }
  return "?";
}

inline StepKind step_kind_from_name(const std::string& s) {
  for (StepKind k : {StepKind::Series, StepKind::Parallel, StepKind::DeltaY, StepKind::YDelta,
                     StepKind::StarMesh, StepKind::MeshStar, StepKind::CutVertexSplit})
    if (s == step_kind_name(k)) return k;
  throw std::invalid_argument("unknown step kind: " + s);
}

/// Edges in steps carry resistances (the circuit-side view).
template <class S>
struct StepEdge {
  VertexId u, v;
  S resistance;
};

template <class S>
struct TransformStep {
  StepKind kind;
  std::vector<VertexId> removed_vertices;
  std::vector<StepEdge<S>> removed_edges;
  std::vector<VertexId> added_vertices;
  std::vector<StepEdge<S>> added_edges;
};

/*
 * Working copy for the rewrite engine. Vertex ids are stable: removals
 * deactivate, fresh vertices extend the id range, so traces stay readable
 * against the original labels.
 */
template <class S>
class CircuitState {
 public:
  explicit CircuitState(const WeightedMultigraph<S>& g) : active_(g.vertex_count(), true) {
    for (const auto& e : g.edges())
      if (e.conductance > S(0)) edges_.push_back(e);  // zero-weight placeholders are non-edges
  }

  int capacity() const { return static_cast<int>(active_.size()); }
  bool active(VertexId v) const { return v >= 0 && v < capacity() && active_[v]; }
  int active_count() const {
    int c = 0;
    for (bool a : active_) c += a;
    return c;
  }

  VertexId add_vertex() {
    active_.push_back(true);
    return capacity() - 1;
  }

  void remove_vertex(VertexId v) {
    for (const auto& e : edges_)
      if (e.u == v || e.v == v) throw std::logic_error("remove_vertex: vertex not isolated");
    active_[v] = false;
  }

  void add_edge(VertexId u, VertexId v, S conductance) {
    if (!active(u) || !active(v) || u == v) throw std::logic_error("add_edge: bad endpoints");
    edges_.push_back({u, v, std::move(conductance)});
  }

  /// Removes one edge matching endpoints and resistance; false if absent.
  bool remove_edge_matching(VertexId u, VertexId v, const S& resistance) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      bool same = (e.u == u && e.v == v) || (e.u == v && e.v == u);
      if (same && S(1) / e.conductance == resistance) {
        edges_.erase(edges_.begin() + static_cast<long>(i));
        return true;
      }
    }
    return false;
  }

  void remove_edge_index(std::size_t i) { edges_.erase(edges_.begin() + static_cast<long>(i)); }

  const std::vector<Edge<S>>& edges() const { return edges_; }

  std::vector<std::size_t> incident(VertexId v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].u == v || edges_[i].v == v) out.push_back(i);
    return out;
  }

  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  std::vector<VertexId> neighbors(VertexId v) const {
    std::set<VertexId> out;
    for (const auto& e : edges_) {
      if (e.u == v) out.insert(e.v);
      if (e.v == v) out.insert(e.u);
    }
    return {out.begin(), out.end()};
  }

  std::vector<std::size_t> edges_between(VertexId u, VertexId v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) out.push_back(i);
    }
    return out;
  }

  std::optional<std::size_t> simple_edge(VertexId u, VertexId v) const {
    auto found = edges_between(u, v);
    if (found.size() != 1) return std::nullopt;
    return found[0];
  }

  /// Compacts active vertices into a graph; orig_of[new_id] = stable id.
  WeightedMultigraph<S> compact(std::vector<VertexId>* orig_of = nullptr) const {
    std::vector<VertexId> map(capacity(), -1);
    std::vector<VertexId> orig;
    for (VertexId v = 0; v < capacity(); ++v)
      if (active_[v]) {
        map[v] = static_cast<VertexId>(orig.size());
        orig.push_back(v);
      }
    WeightedMultigraph<S> g(static_cast<int>(orig.size()));
    for (const auto& e : edges_) g.add_edge(map[e.u], map[e.v], e.conductance);
    if (orig_of) *orig_of = std::move(orig);
    return g;
  }

 private:
  std::vector<bool> active_;
  std::vector<Edge<S>> edges_;
};

namespace detail {

template <class S>
StepEdge<S> as_step_edge(const Edge<S>& e) {
  return {e.u, e.v, S(1) / e.conductance};
}

}  // namespace detail

/// Replays a recorded step against a state (used by the soundness tests).
template <class S>
void replay_step(CircuitState<S>& state, const TransformStep<S>& step) {
  for (const auto& e : step.removed_edges)
    if (!state.remove_edge_matching(e.u, e.v, e.resistance))
      throw std::logic_error("replay: recorded removed edge not present");
  for (VertexId v : step.removed_vertices) state.remove_vertex(v);
  for ([[maybe_unused]] VertexId v : step.added_vertices) state.add_vertex();
  for (const auto& e : step.added_edges) state.add_edge(e.u, e.v, S(1) / e.resistance);
}

/*
 * Series: a degree-2 vertex with two distinct neighbors is deleted,
 * R_C = R_A + R_B.
 */
template <class S>
TransformStep<S> series_reduce(CircuitState<S>& state, VertexId mid) {
  auto inc = state.incident(mid);
  if (inc.size() != 2) throw not_applicable("series: vertex degree is not 2");
  const auto e1 = state.edges()[inc[0]];
  const auto e2 = state.edges()[inc[1]];
  VertexId a = e1.u == mid ? e1.v : e1.u;
  VertexId b = e2.u == mid ? e2.v : e2.u;
  if (a == b) throw not_applicable("series: incident edges are parallel");
  S r = S(1) / e1.conductance + S(1) / e2.conductance;
  TransformStep<S> step{StepKind::Series, {mid},
                        {detail::as_step_edge(e1), detail::as_step_edge(e2)},
                        {},
                        {{a, b, r}}};
  state.remove_edge_index(std::max(inc[0], inc[1]));
  state.remove_edge_index(std::min(inc[0], inc[1]));
  state.remove_vertex(mid);
  state.add_edge(a, b, S(1) / r);
  return step;
}

/// Parallel: all edges between u and v merge; conductances add.
template <class S>
TransformStep<S> parallel_reduce(CircuitState<S>& state, VertexId u, VertexId v) {
  auto idx = state.edges_between(u, v);
  if (idx.size() < 2) throw not_applicable("parallel: fewer than two edges");
  TransformStep<S> step{StepKind::Parallel, {}, {}, {}, {}};
  S total(0);
  for (auto i : idx) {
    step.removed_edges.push_back(detail::as_step_edge(state.edges()[i]));
    total += state.edges()[i].conductance;
  }
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) state.remove_edge_index(*it);
  state.add_edge(u, v, total);
  step.added_edges.push_back({u, v, S(1) / total});
  return step;
}

/*
 * Delta-Y on the triangle (n1,n2,n3); one fresh center vertex. With
 * R_A = r(n2,n3), R_B = r(n1,n3), R_C = r(n1,n2):
 *   leg(n1) = R_B R_C / S,  leg(n2) = R_A R_C / S,  leg(n3) = R_A R_B / S.
 */
template <class S>
TransformStep<S> delta_y(CircuitState<S>& state, VertexId n1, VertexId n2, VertexId n3) {
  auto e23 = state.simple_edge(n2, n3);
  auto e13 = state.simple_edge(n1, n3);
  auto e12 = state.simple_edge(n1, n2);
  if (!e23 || !e13 || !e12)
    throw not_applicable("delta-y: need exactly one edge per side (merge parallels first)");
  S ra = S(1) / state.edges()[*e23].conductance;
  S rb = S(1) / state.edges()[*e13].conductance;
  S rc = S(1) / state.edges()[*e12].conductance;
  S sum = ra + rb + rc;
  TransformStep<S> step{StepKind::DeltaY, {},
                        {detail::as_step_edge(state.edges()[*e23]),
                         detail::as_step_edge(state.edges()[*e13]),
                         detail::as_step_edge(state.edges()[*e12])},
                        {},
                        {}};
  std::vector<std::size_t> idx{*e23, *e13, *e12};
  std::sort(idx.rbegin(), idx.rend());
  for (auto i : idx) state.remove_edge_index(i);
  VertexId center = state.add_vertex();
  step.added_vertices.push_back(center);
  S l1 = rb * rc / sum, l2 = ra * rc / sum, l3 = ra * rb / sum;
  state.add_edge(center, n1, S(1) / l1);
  state.add_edge(center, n2, S(1) / l2);
  state.add_edge(center, n3, S(1) / l3);
  step.added_edges = {{center, n1, l1}, {center, n2, l2}, {center, n3, l3}};
  return step;
}

/*
 * Y-Delta: a degree-3 center is deleted; with legs R_1,R_2,R_3 and
 * P = R_1R_2 + R_2R_3 + R_1R_3, the edge opposite leg k gets P / R_k.
 */
template <class S>
TransformStep<S> y_delta(CircuitState<S>& state, VertexId center) {
  auto inc = state.incident(center);
  if (inc.size() != 3) throw not_applicable("y-delta: center degree is not 3");
  std::array<VertexId, 3> n{};
  std::array<S, 3> r{};
  for (int k = 0; k < 3; ++k) {
    const auto& e = state.edges()[inc[k]];
    n[k] = e.u == center ? e.v : e.u;
    r[k] = S(1) / e.conductance;
  }
  if (n[0] == n[1] || n[1] == n[2] || n[0] == n[2])
    throw not_applicable("y-delta: parallel legs (merge parallels first)");
  S p = r[0] * r[1] + r[1] * r[2] + r[0] * r[2];
  TransformStep<S> step{StepKind::YDelta, {center}, {}, {}, {}};
  for (int k = 0; k < 3; ++k) step.removed_edges.push_back(detail::as_step_edge(state.edges()[inc[k]]));
  std::sort(inc.rbegin(), inc.rend());
  for (auto i : inc) state.remove_edge_index(i);
  state.remove_vertex(center);
  // edge (n1,n2) is opposite leg 3, etc.
  S r01 = p / r[2], r12 = p / r[0], r02 = p / r[1];
  state.add_edge(n[0], n[1], S(1) / r01);
  state.add_edge(n[1], n[2], S(1) / r12);
  state.add_edge(n[0], n[2], S(1) / r02);
  step.added_edges = {{n[0], n[1], r01}, {n[1], n[2], r12}, {n[0], n[2], r02}};
  return step;
}

/*
 * Star-mesh: an N-star center (N >= 3) is replaced by the clique on its
 * neighbors with R_uv = R_u R_v * sum_k (1/R_k). (The resistance-
 * preservation property test pins this form down; for N = 3 it coincides
 * with Y-Delta.)
 */
template <class S>
TransformStep<S> star_mesh(CircuitState<S>& state, VertexId center) {
  auto inc = state.incident(center);
  if (inc.size() < 3) throw not_applicable("star-mesh: center degree < 3");
  std::vector<VertexId> nb;
  std::vector<S> r;
  for (auto i : inc) {
    const auto& e = state.edges()[i];
    nb.push_back(e.u == center ? e.v : e.u);
    r.push_back(S(1) / e.conductance);
  }
  std::set<VertexId> distinct(nb.begin(), nb.end());
  if (distinct.size() != nb.size())
    throw not_applicable("star-mesh: parallel legs (merge parallels first)");
  S recip_sum(0);
  for (const auto& x : r) recip_sum += S(1) / x;
  TransformStep<S> step{StepKind::StarMesh, {center}, {}, {}, {}};
  for (auto i : inc) step.removed_edges.push_back(detail::as_step_edge(state.edges()[i]));
  std::sort(inc.rbegin(), inc.rend());
  for (auto i : inc) state.remove_edge_index(i);
  state.remove_vertex(center);
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      S ruv = r[a] * r[b] * recip_sum;
      state.add_edge(nb[a], nb[b], S(1) / ruv);
      step.added_edges.push_back({nb[a], nb[b], ruv});
    }
  return step;
}

/// Opposite-pair products AD = CE = BF for the specialized N = 4 mesh-star.
template <class S>
bool mesh_star_admissible_n4(const CircuitState<S>& state, const std::array<VertexId, 4>& q) {
  std::array<std::array<std::optional<S>, 4>, 4> r{};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      auto e = state.simple_edge(q[a], q[b]);
      if (!e) return false;
      r[a][b] = S(1) / state.edges()[*e].conductance;
    }
  S ad = *r[0][1] * *r[2][3];
  S ce = *r[0][2] * *r[1][3];
  S bf = *r[0][3] * *r[1][2];
  return ad == ce && ce == bf;
}

namespace detail {

/// Exact square root of a rational if it exists.
inline std::optional<Rat> rational_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt rn = boost::multiprecision::sqrt(num);
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rat(rn, rd);
}

inline std::optional<double> rational_sqrt(double x) {
  return x >= 0 ? std::optional<double>(std::sqrt(x)) : std::nullopt;
}

}  // namespace detail

/*
 * Mesh-star, N = 4: replaces an admissible K_4 mesh by a 4-star with one
 * fresh center. Requires AD = CE = BF and exact square roots in the
 * current scalar mode.
 */
template <class S>
TransformStep<S> mesh_star(CircuitState<S>& state, const std::array<VertexId, 4>& q) {
  if (!mesh_star_admissible_n4(state, q))
    throw not_applicable("mesh-star: AD = CE = BF admissibility fails");
  std::array<std::array<S, 4>, 4> m{};
  std::array<std::size_t, 6> idx{};
  int t = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      auto e = state.simple_edge(q[a], q[b]);
      idx[t++] = *e;
      m[a][b] = m[b][a] = S(1) / state.edges()[*e].conductance;
    }
  // p_u = R_u sqrt(S) follows from m_uv = p_u p_v; then R_u = p_u / sum(1/p).
  std::array<S, 4> p{};
  for (int a = 0; a < 4; ++a) {
    int b = (a + 1) % 4, c = (a + 2) % 4;
    auto root = detail::rational_sqrt(m[a][b] * m[a][c] / m[b][c]);
    if (!root) throw not_applicable("mesh-star: leg resistances are irrational in exact mode");
    p[a] = *root;
  }
  S recip(0);
  for (const auto& x : p) recip += S(1) / x;
  TransformStep<S> step{StepKind::MeshStar, {}, {}, {}, {}};
  for (auto i : idx) step.removed_edges.push_back(detail::as_step_edge(state.edges()[i]));
  std::sort(idx.rbegin(), idx.rend());
  for (auto i : idx) state.remove_edge_index(i);
  VertexId center = state.add_vertex();
  step.added_vertices.push_back(center);
  for (int a = 0; a < 4; ++a) {
    S leg = p[a] / recip;
    state.add_edge(center, q[a], S(1) / leg);
    step.added_edges.push_back({center, q[a], leg});
  }
  return step;
}

/*
 * Cut-vertex decomposition of a plain graph: one induced subgraph per
 * component of G - v, each keeping v. Resistances inside each piece are
 * those of G.
 */
template <class S>
struct CutComponent {
  WeightedMultigraph<S> graph;
  std::vector<VertexId> orig_of;  // local id -> id in g
};

template <class S>
std::vector<CutComponent<S>> cut_vertex_split(const WeightedMultigraph<S>& g, VertexId v) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (s == v || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges()) {
        if (!(e.conductance > S(0))) continue;
        int other = -1;
        if (e.u == x) other = e.v;
        if (e.v == x) other = e.u;
        if (other >= 0 && other != v && comp[other] < 0) {
          comp[other] = ncomp;
          stack.push_back(other);
        }
      }
    }
    ++ncomp;
  }
  if (ncomp < 2) throw not_applicable("cut_vertex_split: vertex is not a cut vertex");
  std::vector<CutComponent<S>> out(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<VertexId> verts;
    for (int x = 0; x < n; ++x)
      if (comp[x] == c) verts.push_back(x);
    verts.push_back(v);
    std::sort(verts.begin(), verts.end());
    std::vector<VertexId> local(n, -1);
    for (std::size_t k = 0; k < verts.size(); ++k) local[verts[k]] = static_cast<VertexId>(k);
    WeightedMultigraph<S> sub(static_cast<int>(verts.size()));
    for (const auto& e : g.edges())
      if (local[e.u] >= 0 && local[e.v] >= 0 && (comp[e.u] == c || comp[e.v] == c))
        sub.add_edge(local[e.u], local[e.v], e.conductance);
    out[c] = {std::move(sub), std::move(verts)};
  }
  return out;
}

// ---------------------------------------------------------------------------
// greedy two-terminal reduction driver
// ---------------------------------------------------------------------------

template <class S>
struct ReduceResult {
  bool reduced = false;
  S resistance = S(0);  // meaningful iff reduced
  std::vector<TransformStep<S>> trace;
};

namespace detail {

/// Articulation vertices of the active subgraph (iterative Tarjan).
template <class S>
std::vector<VertexId> articulation_points(const CircuitState<S>& state) {
  const int cap = state.capacity();
  std::vector<std::vector<int>> adj(cap);
  for (const auto& e : state.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> disc(cap, -1), low(cap, 0), parent(cap, -1);
  std::vector<char> ap(cap, 0);
  int timer = 0;
  for (int root = 0; root < cap; ++root) {
    if (!state.active(root) || disc[root] >= 0) continue;
    // iterative DFS
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      int x = stack.back().first;
      std::size_t it = stack.back().second;
      if (it < adj[x].size()) {
        ++stack.back().second;
        int y = adj[x][it];
        if (disc[y] < 0) {
          parent[y] = x;
          if (x == root) ++root_children;
          disc[y] = low[y] = timer++;
          stack.emplace_back(y, 0);
        } else if (y != parent[x]) {
          low[x] = std::min(low[x], disc[y]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int px = stack.back().first;
          low[px] = std::min(low[px], low[x]);
          if (px != root && low[x] >= disc[px]) ap[px] = 1;
        }
      }
    }
    if (root_children > 1) ap[root] = 1;
  }
  std::vector<VertexId> out;
  for (int v = 0; v < cap; ++v)
    if (ap[v]) out.push_back(v);
  return out;
}

/// Components of the active subgraph minus v: comp id per vertex, -1 for v/inactive.
template <class S>
std::pair<std::vector<int>, int> components_without(const CircuitState<S>& state, VertexId v) {
  const int cap = state.capacity();
  std::vector<std::vector<int>> adj(cap);
  for (const auto& e : state.edges())
    if (e.u != v && e.v != v) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  std::vector<int> comp(cap, -1);
  int ncomp = 0;
  for (int s = 0; s < cap; ++s) {
    if (!state.active(s) || s == v || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (comp[y] < 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  return {std::move(comp), ncomp};
}

/*
 * Prunes every component of state - v that contains neither terminal
 * (cut-vertex theorem: resistances in the kept part are unchanged).
 */
template <class S>
std::optional<TransformStep<S>> prune_at_cut(CircuitState<S>& state, VertexId v, VertexId s,
                                             VertexId t) {
  auto [comp, ncomp] = components_without(state, v);
  if (ncomp < 2) return std::nullopt;
  std::set<int> keep;
  if (s != v) keep.insert(comp[s]);
  if (t != v) keep.insert(comp[t]);
  if (static_cast<int>(keep.size()) == ncomp) return std::nullopt;
  TransformStep<S> step{StepKind::CutVertexSplit, {}, {}, {}, {}};
  // drop edges touching doomed components
  std::vector<std::size_t> doomed_edges;
  for (std::size_t i = 0; i < state.edges().size(); ++i) {
    const auto& e = state.edges()[i];
    int cu = e.u == v ? -1 : comp[e.u];
    int cv = e.v == v ? -1 : comp[e.v];
    int c = cu >= 0 ? cu : cv;
    if (c >= 0 && !keep.count(c)) {
      doomed_edges.push_back(i);
      step.removed_edges.push_back(as_step_edge(e));
    }
  }
  for (auto it = doomed_edges.rbegin(); it != doomed_edges.rend(); ++it)
    state.remove_edge_index(*it);
  for (int x = 0; x < state.capacity(); ++x)
    if (state.active(x) && x != v && comp[x] >= 0 && !keep.count(comp[x])) {
      step.removed_vertices.push_back(x);
      state.remove_vertex(x);
    }
  return step;
}

}  // namespace detail

/*
 * Greedy driver: exhaust parallel merges, then series eliminations, prune
 * dangling parts at cut vertices, then Y-Delta on degree-3 vertices, then
 * Delta-Y on a triangle at a maximum-degree vertex, within a step budget
 * of 50 |E|. Terminals are never eliminated. Non-reduction is a result,
 * not an error: the caller falls back to an algebraic backend.
 */
template <class S>
ReduceResult<S> reduce_two_terminal_state(CircuitState<S>& state, VertexId s, VertexId t) {
  if (s == t) throw std::invalid_argument("reduce_two_terminal: s == t");
  ReduceResult<S> result;
  const std::size_t budget = 50 * std::max<std::size_t>(state.edges().size(), 1);

  auto try_parallel = [&]() -> bool {
    for (const auto& e : state.edges()) {
      VertexId u = std::min(e.u, e.v), v = std::max(e.u, e.v);
      if (state.edges_between(u, v).size() >= 2) {
        result.trace.push_back(parallel_reduce(state, u, v));
        return true;
      }
    }
    return false;
  };
  auto try_series = [&]() -> bool {
    for (VertexId v = 0; v < state.capacity(); ++v) {
      if (!state.active(v) || v == s || v == t || state.degree(v) != 2) continue;
      auto inc = state.incident(v);
      const auto& e1 = state.edges()[inc[0]];
      const auto& e2 = state.edges()[inc[1]];
      VertexId a = e1.u == v ? e1.v : e1.u;
      VertexId b = e2.u == v ? e2.v : e2.u;
      if (a == b) continue;
      result.trace.push_back(series_reduce(state, v));
      return true;
    }
    return false;
  };
  auto try_prune = [&]() -> bool {
    for (VertexId v : detail::articulation_points(state)) {
      auto step = detail::prune_at_cut(state, v, s, t);
      if (step) {
        result.trace.push_back(std::move(*step));
        return true;
      }
    }
    // terminals of degree >= 1 can also hinge dangling parts
    for (VertexId v : {s, t}) {
      auto step = detail::prune_at_cut(state, v, s, t);
      if (step) {
        result.trace.push_back(std::move(*step));
        return true;
      }
    }
    return false;
  };
  auto try_y_delta = [&]() -> bool {
    for (VertexId v = 0; v < state.capacity(); ++v) {
      if (!state.active(v) || v == s || v == t || state.degree(v) != 3) continue;
      auto nb = state.neighbors(v);
      if (nb.size() != 3) continue;
      result.trace.push_back(y_delta(state, v));
      return true;
    }
    return false;
  };
  auto try_delta_y = [&]() -> bool {
    // triangles incident to a maximum-degree vertex
    VertexId best = -1;
    int best_deg = -1;
    for (VertexId v = 0; v < state.capacity(); ++v)
      if (state.active(v) && state.degree(v) > best_deg) {
        best = v;
        best_deg = state.degree(v);
      }
    if (best < 0) return false;
    auto nb = state.neighbors(best);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (!state.simple_edge(nb[a], nb[b]) || !state.simple_edge(best, nb[a]) ||
            !state.simple_edge(best, nb[b]))
          continue;
        result.trace.push_back(delta_y(state, best, nb[a], nb[b]));
        return true;
      }
    return false;
  };

  while (result.trace.size() < budget) {
    if (state.active_count() == 2) {
      auto between = state.edges_between(s, t);
      if (between.size() > 1) {
        result.trace.push_back(parallel_reduce(state, s, t));
        continue;
      }
      if (between.size() == 1) {
        result.reduced = true;
        result.resistance = S(1) / state.edges()[between[0]].conductance;
        return result;
      }
      return result;  // disconnected remnant; give up
    }
    if (try_parallel()) continue;
    if (try_series()) continue;
    if (try_prune()) continue;
    if (try_y_delta()) continue;
    if (try_delta_y()) continue;
    return result;  // no rule applies
  }
  return result;  // budget exhausted
}

template <class S>
ReduceResult<S> reduce_two_terminal(const WeightedMultigraph<S>& g, VertexId s, VertexId t) {
  require_connected(g, "reduce_two_terminal");
  CircuitState<S> state(g);
  return reduce_two_terminal_state(state, s, t);
}

}  // namespace resistor
