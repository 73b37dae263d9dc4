#pragma once

#include <vector>

#include "resistor/closed_forms.hpp"
#include "resistor/families.hpp"
#include "resistor/transform.hpp"

namespace resistor {

/*
 * Scripted reduction pipelines for the structured families: the ladder
 * tail-exchange loop, the straight-linear-3-tree tetrahedron exchange, and
 * the triangular-grid row elimination. Each returns its full trace so the
 * soundness suite can replay it step by step.
 */

template <class S>
struct LadderState {
  int i;
  S a, b, t;
  BigInt x;  // numerator sequence: x_i = 4 x_{i-1} - x_{i-2} + 1
};

template <class S>
struct LadderReduction {
  std::vector<LadderState<S>> states;  // i = 1 .. n-2
  S r_1_2;
  S r_1_2nm1;  // r(1, 2n-1)
  S r_1_2n;    // r(1, 2n)
  std::vector<TransformStep<S>> trace;
};

/*
 * Ladder loop: series-delete node 2, then repeatedly Delta-Y the leftmost
 * triangle and series-absorb the legs into the rails. The terminal values
 * come from the final Delta-Y legs plus the accumulated tail.
 */
template <class S>
LadderReduction<S> ladder_reduction(int n) {
  if (n < 2) throw std::invalid_argument("ladder_reduction: n >= 2");
  CircuitState<S> state(families::ladder_graph<S>(n));
  LadderReduction<S> out;

  // paper labels 1..2n are ids 0..2n-1
  out.trace.push_back(series_reduce(state, 1));  // delete node 2; edge (1,4) gets resistance 2
  VertexId head = 0;
  S tail_sum(0);
  BigInt x_prev = 0, x_cur = 1;
  for (int i = 1; i <= n - 2; ++i) {
    VertexId top = 2 * i, bot = 2 * i + 1;          // paper 2i+1, 2i+2
    VertexId next_top = 2 * i + 2, next_bot = 2 * i + 3;
    auto step = delta_y(state, head, top, bot);
    VertexId center = step.added_vertices[0];
    S t_i = step.added_edges[0].resistance;  // leg to head
    out.trace.push_back(std::move(step));
    out.trace.push_back(series_reduce(state, top));
    out.trace.push_back(series_reduce(state, bot));
    auto ea = state.simple_edge(center, next_top);
    auto eb = state.simple_edge(center, next_bot);
    S a_i = S(1) / state.edges()[*ea].conductance;
    S b_i = S(1) / state.edges()[*eb].conductance;
    BigInt x_next = 4 * x_cur - x_prev + 1;
    x_prev = x_cur;
    x_cur = x_next;
    out.states.push_back({i, a_i, b_i, t_i, x_cur});
    tail_sum += t_i;
    head = center;
  }
  // final Delta-Y on (head, 2n-1, 2n)
  VertexId top = 2 * n - 2, bot = 2 * n - 1;
  auto last = delta_y(state, head, top, bot);
  S t_final = last.added_edges[0].resistance;
  S leg_top = last.added_edges[1].resistance;
  S leg_bot = last.added_edges[2].resistance;
  out.trace.push_back(std::move(last));
  tail_sum += t_final;
  out.r_1_2nm1 = tail_sum + leg_top;
  out.r_1_2n = tail_sum + leg_bot;
  out.r_1_2 = leg_top + leg_bot;  // = r(2n-1, 2n) by the graph's end-to-end symmetry
  return out;
}

/// Float closed form for the numerator sequence x_i of the ladder loop.
inline double ladder_numerator_closed_form(int i) {
  const double s3 = std::sqrt(3.0);
  return ((3 - s3) * std::pow(2 - s3, i + 1) + (3 + s3) * std::pow(2 + s3, i + 1) - 6) / 12.0;
}

template <class S>
struct Linear3TreeReduction {
  S resistance;  // r(1, n)
  std::vector<TransformStep<S>> trace;
};

/*
 * Straight linear 3-tree: each four-step cycle (Delta-Y, Y-Delta, Delta-Y,
 * Y-Delta) exchanges the front tetrahedron for a pendant tail vertex; the
 * last tetrahedron is handed to the greedy driver.
 */
template <class S>
Linear3TreeReduction<S> linear3tree_reduction(int n) {
  if (n < 4) throw std::invalid_argument("linear3tree_reduction: n >= 4");
  CircuitState<S> state(families::linear_k_tree<S>(n, 3));
  Linear3TreeReduction<S> out;

  // Each cycle consumes chain vertex c: Delta-Y on (head, c, c+1), Y-Delta
  // on c, Delta-Y on (head, star, c+2), Y-Delta on star; the two parallel
  // edges created along the chain are merged as they appear. The head is
  // the fresh vertex; the old head goes pendant on it.
  VertexId head = 0;  // paper node 1
  for (int c = 1; c + 3 <= n - 1; ++c) {
    auto s1 = delta_y(state, head, c, c + 1);
    VertexId star = s1.added_vertices[0];
    out.trace.push_back(std::move(s1));
    out.trace.push_back(y_delta(state, c));
    out.trace.push_back(parallel_reduce(state, c + 2, c + 3));
    auto s3 = delta_y(state, head, star, c + 2);
    VertexId ast = s3.added_vertices[0];
    out.trace.push_back(std::move(s3));
    out.trace.push_back(y_delta(state, star));
    out.trace.push_back(parallel_reduce(state, c + 1, c + 3));
    head = ast;
  }
  // one tetrahedron left: (head, n-3, n-2, n-1) plus the pendant tail to node 1
  auto fin = reduce_two_terminal_state(state, 0, n - 1);
  if (!fin.reduced) throw numeric_error("linear3tree_reduction: final reduction failed");
  out.resistance = fin.resistance;
  for (auto& st : fin.trace) out.trace.push_back(std::move(st));
  return out;
}

template <class S>
struct TriGridReduction {
  CircuitState<S> state;
  std::vector<std::vector<VertexId>> grid;  // grid[r][j] = id of current grid vertex
  VertexId corner_a, corner_b, corner_c;    // pendant original corners
  std::vector<TransformStep<S>> trace;

  explicit TriGridReduction(const WeightedMultigraph<S>& g) : state(g) {}
};

template <class S>
TriGridReduction<S> tri_grid_reduction_begin(int rows) {
  families::TriGridLayout lay;
  auto g = families::triangular_grid<S>(rows, &lay);
  TriGridReduction<S> red(g);
  red.grid.resize(rows + 1);
  for (int r = 0; r <= rows; ++r) {
    red.grid[r].resize(r + 1);
    for (int j = 0; j <= r; ++j) red.grid[r][j] = lay.vid(r, j);
  }
  red.corner_a = lay.apex;
  red.corner_b = lay.bottom_left;
  red.corner_c = lay.bottom_right;
  return red;
}

/*
 * One pass of the row-elimination algorithm: Delta-Y every upright
 * triangle, series-absorb the boundary vertices, Y-Delta the interior
 * ones. On the unit grid the three resulting edge classes are 1/3
 * (pendant legs), 2/3 (exterior), and 1 (interior).
 */
template <class S>
void tri_grid_reduction_pass(TriGridReduction<S>& red) {
  const int rows = static_cast<int>(red.grid.size()) - 1;
  if (rows < 1) throw not_applicable("tri grid pass: nothing to reduce");
  auto& g = red.grid;
  std::vector<std::vector<VertexId>> stars(rows);
  for (int r = 0; r < rows; ++r) {
    stars[r].resize(r + 1);
    for (int j = 0; j <= r; ++j) {
      auto step = delta_y(red.state, g[r][j], g[r + 1][j], g[r + 1][j + 1]);
      stars[r][j] = step.added_vertices[0];
      red.trace.push_back(std::move(step));
    }
  }
  // originals: degree 2 -> series (boundary / tailed corners), degree 3 -> Y-Delta (interior)
  for (int r = 0; r <= rows; ++r)
    for (int j = 0; j <= r; ++j) {
      VertexId v = g[r][j];
      int deg = red.state.degree(v);
      if (deg == 2) {
        red.trace.push_back(series_reduce(red.state, v));
      } else if (deg == 3) {
        red.trace.push_back(y_delta(red.state, v));
      }
      // degree 1: pass-1 pendant corner, stays
    }
  red.grid = std::move(stars);
}

/// Runs passes down to a single triangle and reads r(corner_a, corner_b).
template <class S>
S tri_grid_resistance_by_reduction(int rows, std::vector<TransformStep<S>>* trace_out = nullptr) {
  auto red = tri_grid_reduction_begin<S>(rows);
  while (static_cast<int>(red.grid.size()) > 2) tri_grid_reduction_pass(red);
  auto fin = reduce_two_terminal_state(red.state, red.corner_a, red.corner_b);
  if (!fin.reduced) throw numeric_error("tri grid reduction: final reduction failed");
  if (trace_out) {
    *trace_out = std::move(red.trace);
    for (auto& st : fin.trace) trace_out->push_back(std::move(st));
  }
  return fin.resistance;
}

}  // namespace resistor
