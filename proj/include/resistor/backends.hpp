#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resistor/alt_solvers.hpp"
#include "resistor/approx.hpp"
#include "resistor/forests.hpp"
#include "resistor/incremental.hpp"
#include "resistor/solvers.hpp"
#include "resistor/transform.hpp"

namespace resistor {

/*
 * Uniform handle over the independent resistance backends. Each one is a
 * complete route from graph to value; cross-checking them is the point of
 * the toolkit.
 */
enum class Backend { Counts, Pseudoinverse, Transform, Incremental, LocalRules, Energy, Simplex };

inline const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Counts: return "counts";
    case Backend::Pseudoinverse: return "pseudoinverse";
    case Backend::Transform: return "transform";
    case Backend::Incremental: return "incremental";
    case Backend::LocalRules: return "local-rules";
    case Backend::Energy: return "energy";
    case Backend::Simplex: return "simplex";
  }
  return "?";
}

inline Backend backend_from_name(const std::string& s) {
  for (Backend b : {Backend::Counts, Backend::Pseudoinverse, Backend::Transform,
                    Backend::Incremental, Backend::LocalRules, Backend::Energy, Backend::Simplex})
    if (s == backend_name(b)) return b;
  throw std::invalid_argument("unknown backend: " + s);
}

inline std::vector<Backend> all_backends() {
  return {Backend::Counts,     Backend::Pseudoinverse, Backend::Transform, Backend::Incremental,
          Backend::LocalRules, Backend::Energy,        Backend::Simplex};
}

/*
 * Single-pair evaluation. Returns nullopt when the backend does not apply
 * to this graph/mode (transform failed to reduce, local rules on weighted
 * input, simplex in exact mode); errors still throw.
 */
template <class S>
std::optional<S> backend_resistance(const WeightedMultigraph<S>& g, Backend b, VertexId u,
                                    VertexId v, std::vector<TransformStep<S>>* trace = nullptr) {
  switch (b) {
    case Backend::Counts:
      return resistance_by_counts(g, u, v);
    case Backend::Pseudoinverse:
      return resistance_pseudoinverse(g, u, v);
    case Backend::Transform: {
      auto res = reduce_two_terminal(g, u, v);
      if (trace) *trace = res.trace;
      if (!res.reduced) return std::nullopt;
      return res.resistance;
    }
    case Backend::Incremental:
      return resistance_incremental(g, u, v);
    case Backend::LocalRules: {
      for (const auto& e : g.edges())
        if (e.conductance != S(1)) return std::nullopt;
      return local_rules_solve(g, OrbitPartition::trivial(g.vertex_count()))(u, v);
    }
    case Backend::Energy:
      return energy_min_resistance(g, u, v).resistance;
    case Backend::Simplex: {
      if constexpr (is_exact_v<S>) {
        return std::nullopt;  // eigendecomposition route is float-only
      } else {
        auto emb = simplex_embed(g);
        return simplex_resistance(emb, u, v);
      }
    }
  }
  return std::nullopt;
}

/// All-pairs matrix for one backend; nullopt if the backend does not apply.
template <class S>
std::optional<Matrix<S>> backend_matrix(const WeightedMultigraph<S>& g, Backend b) {
  const int n = g.vertex_count();
  switch (b) {
    case Backend::Pseudoinverse:
      return resistance_matrix(g);
    case Backend::Incremental:
      return resistance_matrix_incremental(g);
    case Backend::LocalRules: {
      for (const auto& e : g.edges())
        if (e.conductance != S(1)) return std::nullopt;
      return local_rules_solve(g, OrbitPartition::trivial(n));
    }
    case Backend::Simplex: {
      if constexpr (is_exact_v<S>) {
        return std::nullopt;
      } else {
        auto emb = simplex_embed(g);
        Matrix<S> m(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = simplex_resistance(emb, i, j);
        return m;
      }
    }
    default: {
      Matrix<S> m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto r = backend_resistance(g, b, i, j);
          if (!r) return std::nullopt;
          m(i, j) = m(j, i) = *r;
        }
      return m;
    }
  }
}

}  // namespace resistor
