#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "resistor/errors.hpp"
#include "resistor/matrix.hpp"
#include "resistor/scalar.hpp"

namespace resistor {

using VertexId = int;

template <class S>
struct Edge {
  VertexId u, v;
  S conductance;  // resistance = 1 / conductance; 0 = infinite-resistance placeholder
};

/*
 * Undirected weighted multigraph. Vertex ids are 0-based and contiguous;
 * parallel edges are permitted, self-loops are not. Treated as an
 * immutable value after construction.
 */
template <class S>
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;
  explicit WeightedMultigraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count <= 0) throw std::invalid_argument("vertex_count must be positive");
  }
  WeightedMultigraph(int vertex_count, std::vector<Edge<S>> edges)
      : WeightedMultigraph(vertex_count) {
    for (auto& e : edges) add_edge(e.u, e.v, e.conductance);
  }

  int vertex_count() const { return n_; }
  const std::vector<Edge<S>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  void add_edge(VertexId u, VertexId v, S conductance) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex id out of range");
    if (conductance < S(0)) throw std::invalid_argument("negative conductance");
    edges_.push_back({u, v, std::move(conductance)});
  }

  void add_unit_edge(VertexId u, VertexId v) { add_edge(u, v, S(1)); }

  S total_conductance() const {
    S s(0);
    for (const auto& e : edges_) s += e.conductance;
    return s;
  }

  /// Degree counting edge multiplicity (positive-conductance edges only).
  int degree(VertexId v) const {
    int d = 0;
    for (const auto& e : edges_)
      if ((e.u == v || e.v == v) && e.conductance > S(0)) ++d;
    return d;
  }

  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& e : edges_) {
      if (e.conductance == S(0)) continue;
      if (e.u == v) out.push_back(e.v);
      if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  int n_ = 0;
  std::vector<Edge<S>> edges_;
};

template <class S>
Matrix<S> build_laplacian(const WeightedMultigraph<S>& g) {
  const int n = g.vertex_count();
  Matrix<S> L(n, n);
  for (const auto& e : g.edges()) {
    L(e.u, e.u) += e.conductance;
    L(e.v, e.v) += e.conductance;
    L(e.u, e.v) -= e.conductance;
    L(e.v, e.u) -= e.conductance;
  }
  return L;
}

/// Reachability over strictly positive conductances.
template <class S>
bool check_connected(const WeightedMultigraph<S>& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& e : g.edges()) {
    if (!(e.conductance > S(0))) continue;
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

template <class S>
void require_connected(const WeightedMultigraph<S>& g, const char* who) {
  if (!check_connected(g)) throw disconnected_error(std::string(who) + ": graph is not connected");
}

template <class S>
struct ContractionResult {
  WeightedMultigraph<S> graph;
  std::vector<VertexId> id_map;  // old id -> new id; the merged pair maps to one id
  VertexId merged;
};

/*
 * G/ij: identifies i and j. Common neighbors yield parallel edges, an
 * {i,j} edge disappears, ids are re-packed contiguously.
 */
template <class S>
ContractionResult<S> contract_pair(const WeightedMultigraph<S>& g, VertexId i, VertexId j) {
  if (i == j) throw std::invalid_argument("contract_pair: i == j");
  const int n = g.vertex_count();
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("contract_pair: id out of range");
  VertexId lo = std::min(i, j), hi = std::max(i, j);
  std::vector<VertexId> map(n);
  for (VertexId v = 0; v < n; ++v) {
    if (v == hi)
      map[v] = lo;
    else
      map[v] = v < hi ? v : v - 1;
  }
  WeightedMultigraph<S> out(n - 1);
  for (const auto& e : g.edges()) {
    VertexId u2 = map[e.u], v2 = map[e.v];
    if (u2 == v2) continue;  // the {i,j} edge disappears
    out.add_edge(u2, v2, e.conductance);
  }
  VertexId merged = map[hi];
  return {std::move(out), std::move(map), merged};
}

/*
 * Edge-list text format: "u v [weight]" per line, 1-based ids, rational
 * weights written "p/q" (default 1); '#' starts a comment; an optional
 * header line "n <vertex_count>" pins the vertex count.
 */
template <class S>
WeightedMultigraph<S> read_edge_list(std::istream& in) {
  std::vector<std::tuple<int, int, S>> raw;
  int declared_n = 0;
  int max_id = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> declared_n) || declared_n <= 0)
        throw std::invalid_argument("edge list: bad header line");
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
    } catch (...) {
      throw std::invalid_argument("edge list: bad vertex id '" + first + "'");
    }
    if (!(ls >> v)) throw std::invalid_argument("edge list: missing second vertex id");
    std::string wtext;
    S w = ls >> wtext ? parse_scalar<S>(wtext) : S(1);
    if (u < 1 || v < 1) throw std::invalid_argument("edge list: ids are 1-based");
    max_id = std::max({max_id, u, v});
    raw.emplace_back(u, v, std::move(w));
  }
  int n = declared_n > 0 ? declared_n : max_id;
  if (n == 0) throw std::invalid_argument("edge list: no vertices");
  if (max_id > n) throw std::invalid_argument("edge list: id exceeds declared vertex count");
  WeightedMultigraph<S> g(n);
  for (auto& [u, v, w] : raw) g.add_edge(u - 1, v - 1, std::move(w));
  return g;
}

template <class S>
WeightedMultigraph<S> read_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list<S>(in);
}

template <class S>
void write_edge_list(std::ostream& out, const WeightedMultigraph<S>& g) {
  out << "n " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) {
    out << (e.u + 1) << " " << (e.v + 1);
    if (e.conductance != S(1)) out << " " << format_scalar(e.conductance);
    out << "\n";
  }
}

/// Explicit mode crossing: exact graph -> float graph.
inline WeightedMultigraph<double> to_float(const WeightedMultigraph<Rat>& g) {
  WeightedMultigraph<double> out(g.vertex_count());
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v, to_double(e.conductance));
  return out;
}

}  // namespace resistor
