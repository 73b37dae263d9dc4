#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "resistor/forests.hpp"
#include "resistor/solvers.hpp"
#include "resistor/trace_io.hpp"
#include "resistor/transform.hpp"
#include "test_support.hpp"

using namespace resistor;

namespace {

/// All-pairs resistances among the active vertices, keyed by stable id.
std::map<std::pair<VertexId, VertexId>, Rat> active_resistances(const CircuitState<Rat>& state) {
  std::vector<VertexId> orig;
  auto g = state.compact(&orig);
  GroundedInverse<Rat> gi(g, g.vertex_count() - 1);
  std::map<std::pair<VertexId, VertexId>, Rat> out;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      out[{orig[i], orig[j]}] = gi.resistance(i, j);
  return out;
}

/// Replays a trace, checking that every step preserves surviving-pair resistances.
void check_trace_soundness(const WeightedMultigraph<Rat>& g,
                           const std::vector<TransformStep<Rat>>& trace) {
  CircuitState<Rat> state(g);
  auto before = active_resistances(state);
  for (const auto& step : trace) {
    replay_step(state, step);
    auto after = active_resistances(state);
    for (const auto& [pair, r] : after) {
      auto it = before.find(pair);
      if (it != before.end()) REQUIRE(it->second == r);
    }
    before = std::move(after);
  }
}

}  // namespace

TEST_CASE("series reduction") {
  CircuitState<Rat> p3(families::path_graph<Rat>(3));
  auto step = series_reduce(p3, 1);
  CHECK(step.added_edges.size() == 1);
  CHECK(step.added_edges[0].resistance == Rat(2));
  CHECK(p3.active_count() == 2);

  // ladder: eliminating node 2 leaves edge (1,4) with resistance 2
  CircuitState<Rat> lad(families::ladder_graph<Rat>(4));
  auto s2 = series_reduce(lad, 1);
  CHECK(s2.added_edges[0].u == 0);
  CHECK(s2.added_edges[0].v == 3);
  CHECK(s2.added_edges[0].resistance == Rat(2));

  // resistances 1/3 and 1 in series
  WeightedMultigraph<Rat> mixed(3);
  mixed.add_edge(0, 1, Rat(3));  // resistance 1/3
  mixed.add_edge(1, 2, Rat(1));
  CircuitState<Rat> st(mixed);
  CHECK(series_reduce(st, 1).added_edges[0].resistance == Rat(4, 3));

  CircuitState<Rat> c3(families::cycle_graph<Rat>(3));
  CHECK_THROWS_AS(series_reduce(c3, 0), not_applicable);
}

TEST_CASE("parallel reduction") {
  WeightedMultigraph<Rat> two(2);
  two.add_unit_edge(0, 1);
  two.add_unit_edge(0, 1);
  CircuitState<Rat> st(two);
  CHECK(parallel_reduce(st, 0, 1).added_edges[0].resistance == Rat(1, 2));

  WeightedMultigraph<Rat> halves(2);
  halves.add_edge(0, 1, Rat(1, 2));  // resistance 2
  halves.add_edge(0, 1, Rat(1, 2));
  CircuitState<Rat> st2(halves);
  CHECK(parallel_reduce(st2, 0, 1).added_edges[0].resistance == Rat(1));

  // C_3 with one edge contracted leaves a double unit edge
  auto contracted = contract_pair(families::cycle_graph<Rat>(3), 0, 1).graph;
  CircuitState<Rat> st3(contracted);
  CHECK(parallel_reduce(st3, 0, 1).added_edges[0].resistance == Rat(1, 2));

  CircuitState<Rat> p3(families::path_graph<Rat>(3));
  CHECK_THROWS_AS(parallel_reduce(p3, 0, 1), not_applicable);
}

TEST_CASE("delta-y and y-delta") {
  CircuitState<Rat> tri(families::cycle_graph<Rat>(3));
  auto step = delta_y(tri, 0, 1, 2);
  for (const auto& e : step.added_edges) CHECK(e.resistance == Rat(1, 3));

  // the ladder triangle (a0=1, b0=2, rung 1): legs 1/2, 1/4, 1/2
  WeightedMultigraph<Rat> lt(3);
  lt.add_edge(0, 1, Rat(1));      // a0 = 1
  lt.add_edge(0, 2, Rat(1, 2));   // b0 = 2
  lt.add_edge(1, 2, Rat(1));      // rung
  CircuitState<Rat> st(lt);
  auto legs = delta_y(st, 0, 1, 2);
  CHECK(legs.added_edges[0].resistance == Rat(1, 2));  // t_1, leg to node 0
  CHECK(legs.added_edges[1].resistance == Rat(1, 4));
  CHECK(legs.added_edges[2].resistance == Rat(1, 2));

  // round trip: y-delta on the fresh center restores the triangle exactly
  auto back = y_delta(st, legs.added_vertices[0]);
  std::map<std::pair<VertexId, VertexId>, Rat> got;
  for (const auto& e : back.added_edges) got[{std::min(e.u, e.v), std::max(e.u, e.v)}] = e.resistance;
  CHECK(got[{0, 1}] == Rat(1));
  CHECK(got[{0, 2}] == Rat(2));
  CHECK(got[{1, 2}] == Rat(1));
}

TEST_CASE("y-delta on weighted legs preserves leaf resistances") {
  WeightedMultigraph<Rat> y(4);
  y.add_edge(3, 0, Rat(4));  // leg resistance 1/4
  y.add_edge(3, 1, Rat(2));  // 1/2
  y.add_edge(3, 2, Rat(2));  // 1/2
  GroundedInverse<Rat> before(y, 0);
  CircuitState<Rat> st(y);
  auto step = y_delta(st, 3);
  CHECK(step.removed_vertices == std::vector<VertexId>{3});
  std::vector<VertexId> orig;
  auto tri = st.compact(&orig);
  GroundedInverse<Rat> after(tri, 0);
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) REQUIRE(after.resistance(u, v) == before.resistance(u, v));
}

TEST_CASE("star-mesh") {
  // N = 3 equals y-delta exactly
  WeightedMultigraph<Rat> y(4);
  y.add_edge(3, 0, Rat(4));
  y.add_edge(3, 1, Rat(2));
  y.add_edge(3, 2, Rat(2));
  CircuitState<Rat> a(y), b(y);
  auto sm = star_mesh(a, 3);
  auto yd = y_delta(b, 3);
  auto key = [](const StepEdge<Rat>& e) {
    return std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
  };
  std::map<std::pair<VertexId, VertexId>, Rat> m1, m2;
  for (const auto& e : sm.added_edges) m1[key(e)] = e.resistance;
  for (const auto& e : yd.added_edges) m2[key(e)] = e.resistance;
  CHECK(m1 == m2);

  // unit stars N = 3..6: leaf-pair resistances preserved
  for (int N = 3; N <= 6; ++N) {
    WeightedMultigraph<Rat> star(N + 1);
    for (int leaf = 1; leaf <= N; ++leaf) star.add_unit_edge(0, leaf);
    GroundedInverse<Rat> before(star, 1);
    CircuitState<Rat> st(star);
    star_mesh(st, 0);
    std::vector<VertexId> orig;
    auto mesh = st.compact(&orig);
    GroundedInverse<Rat> after(mesh, 0);
    for (int u = 1; u <= N; ++u)
      for (int v = u + 1; v <= N; ++v)
        REQUIRE(before.resistance(u, v) == after.resistance(u - 1, v - 1));
  }

  CircuitState<Rat> p3(families::path_graph<Rat>(3));
  CHECK_THROWS_AS(star_mesh(p3, 1), not_applicable);
}

TEST_CASE("mesh-star N=4") {
  CircuitState<Rat> k4(families::complete_graph<Rat>(4));
  std::array<VertexId, 4> q{0, 1, 2, 3};
  REQUIRE(mesh_star_admissible_n4(k4, q));
  GroundedInverse<Rat> before(k4.compact(), 0);
  auto step = mesh_star(k4, q);
  for (const auto& e : step.added_edges) CHECK(e.resistance == Rat(1, 4));
  std::vector<VertexId> orig;
  auto star = k4.compact(&orig);
  GroundedInverse<Rat> after(star, 0);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) REQUIRE(before.resistance(u, v) == after.resistance(u, v));

  // inadmissible mesh: perturb one edge
  WeightedMultigraph<Rat> bad = families::complete_graph<Rat>(4);
  bad.add_unit_edge(0, 1);  // doubles an edge -> resistance 1/2 after merge
  CircuitState<Rat> st(bad);
  parallel_reduce(st, 0, 1);
  CHECK_FALSE(mesh_star_admissible_n4(st, q));
  CHECK_THROWS_AS(mesh_star(st, q), not_applicable);
}

TEST_CASE("cut vertex split") {
  // two triangles sharing vertex 2
  WeightedMultigraph<Rat> bowtie(5);
  bowtie.add_unit_edge(0, 1);
  bowtie.add_unit_edge(1, 2);
  bowtie.add_unit_edge(0, 2);
  bowtie.add_unit_edge(2, 3);
  bowtie.add_unit_edge(3, 4);
  bowtie.add_unit_edge(2, 4);
  auto parts = cut_vertex_split(bowtie, 2);
  REQUIRE(parts.size() == 2);
  for (const auto& part : parts) {
    CHECK(part.graph.vertex_count() == 3);
    CHECK(part.graph.edge_count() == 3);
  }
  // within a component, resistances match the whole graph
  GroundedInverse<Rat> whole(bowtie, 2);
  for (const auto& part : parts) {
    GroundedInverse<Rat> sub(part.graph, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        REQUIRE(sub.resistance(i, j) == whole.resistance(part.orig_of[i], part.orig_of[j]));
  }
  // across the cut vertex: r(i,j) = r(i,v) + r(v,j)
  CHECK(whole.resistance(0, 4) == whole.resistance(0, 2) + whole.resistance(2, 4));

  CHECK_THROWS_AS(cut_vertex_split(families::cycle_graph<Rat>(4), 0), not_applicable);

  // bridge graph: the bridge edge lands in one component
  WeightedMultigraph<Rat> bridge(4);
  bridge.add_unit_edge(0, 1);
  bridge.add_unit_edge(1, 2);
  bridge.add_unit_edge(2, 3);
  auto sides = cut_vertex_split(bridge, 1);
  REQUIRE(sides.size() == 2);
}

TEST_CASE("reduce_two_terminal on ladders and K4") {
  auto l3 = families::ladder_graph<Rat>(3);
  auto res = reduce_two_terminal(l3, 0, 5);
  REQUIRE(res.reduced);
  CHECK(res.resistance == Rat(21, 15));
  check_trace_soundness(l3, res.trace);

  auto k4 = families::complete_graph<Rat>(4);
  auto rk = reduce_two_terminal(k4, 0, 1);
  REQUIRE(rk.reduced);
  CHECK(rk.resistance == Rat(1, 2));
  check_trace_soundness(k4, rk.trace);

  CHECK_THROWS_AS(reduce_two_terminal(l3, 2, 2), std::invalid_argument);
}

TEST_CASE("reduce_two_terminal fully reduces series-parallel graphs") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    VertexId s = 0, t = 0;
    auto g = testing::random_series_parallel(9, seed, &s, &t);
    auto res = reduce_two_terminal(g, s, t);
    REQUIRE(res.reduced);
    REQUIRE(res.resistance == resistance_by_counts(g, s, t));
    check_trace_soundness(g, res.trace);
  }
}

TEST_CASE("reduce_two_terminal agrees with counts when it succeeds on the corpus") {
  int reduced_count = 0;
  auto corpus = testing::small_corpus(40);
  for (const auto& item : corpus) {
    const auto& g = item.graph;
    auto res = reduce_two_terminal(g, 0, g.vertex_count() - 1);
    if (!res.reduced) continue;
    ++reduced_count;
    REQUIRE(res.resistance == resistance_by_counts(g, 0, g.vertex_count() - 1));
  }
  CHECK(reduced_count >= 30);  // the greedy driver handles most small graphs
}

TEST_CASE("delta-y / y-delta round trip is the identity on resistances") {
  for (std::uint64_t seed : {4u, 9u}) {
    auto g = testing::random_connected(6, 0.6, seed);
    // find a triangle
    CircuitState<Rat> st(g);
    bool found = false;
    for (VertexId a = 0; a < 6 && !found; ++a)
      for (VertexId b = a + 1; b < 6 && !found; ++b)
        for (VertexId c = b + 1; c < 6 && !found; ++c) {
          if (!st.simple_edge(a, b) || !st.simple_edge(b, c) || !st.simple_edge(a, c)) continue;
          found = true;
          auto before = st.edges();
          auto step = delta_y(st, a, b, c);
          y_delta(st, step.added_vertices[0]);
          auto after = st.edges();
          // same edge multiset up to order
          auto canon = [](std::vector<Edge<Rat>> es) {
            std::vector<std::tuple<int, int, Rat>> v;
            for (const auto& e : es)
              v.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), e.conductance);
            std::sort(v.begin(), v.end());
            return v;
          };
          REQUIRE(canon(before) == canon(after));
        }
  }
}

TEST_CASE("trace serialization round trip") {
  auto l3 = families::ladder_graph<Rat>(3);
  auto res = reduce_two_terminal(l3, 0, 5);
  auto j = trace_to_json(res.trace);
  auto back = trace_from_json<Rat>(j);
  REQUIRE(back.size() == res.trace.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].kind == res.trace[i].kind);
    CHECK(back[i].removed_vertices == res.trace[i].removed_vertices);
    REQUIRE(back[i].added_edges.size() == res.trace[i].added_edges.size());
    for (std::size_t k = 0; k < back[i].added_edges.size(); ++k)
      CHECK(back[i].added_edges[k].resistance == res.trace[i].added_edges[k].resistance);
  }
  // replay of the parsed trace reaches the same terminal edge
  CircuitState<Rat> st(l3);
  for (const auto& step : back) replay_step(st, step);
  CHECK(st.active_count() == 2);

  std::ostringstream text;
  write_trace_text(text, res.trace);
  CHECK(text.str().find("series") != std::string::npos);
}
