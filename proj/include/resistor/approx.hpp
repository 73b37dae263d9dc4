#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "resistor/eigen_support.hpp"
#include "resistor/graph.hpp"

namespace resistor {

/*
 * Approximate estimators for large graphs: spectral truncation,
 * Johnson-Lindenstrauss sketching of the weighted incidence embedding,
 * and Monte Carlo commute times. All randomness is seeded explicitly.
 */

struct SpectralTruncation {
  Eigen::VectorXd eigenvalues;  // full nonzero spectrum, ascending
  Eigen::MatrixXd eigenvectors; // matching columns
  int usable;                   // count of nonzero eigenpairs (= n-1 when connected)
};

template <class S>
SpectralTruncation spectral_prepare(const WeightedMultigraph<S>& g) {
  require_connected(g, "spectral_estimate");
  auto eig = eigendecompose(laplacian_as_eigen(g));
  const int n = g.vertex_count();
  const double cutoff = 1e-9 * eig.values.cwiseAbs().maxCoeff();
  SpectralTruncation st;
  st.eigenvalues = Eigen::VectorXd::Zero(n);
  st.eigenvectors = Eigen::MatrixXd::Zero(n, n);
  int col = 0;
  for (int k = 0; k < n; ++k) {
    if (std::abs(eig.values(k)) <= cutoff) continue;
    st.eigenvalues(col) = eig.values(k);
    st.eigenvectors.col(col) = eig.vectors.col(k);
    ++col;
  }
  st.usable = col;
  return st;
}

/// Partial sum over the t smallest nonzero eigenpairs; exact at t = n-1.
inline double spectral_estimate(const SpectralTruncation& st, int t, VertexId i, VertexId j) {
  if (t < 1 || t > st.usable) throw std::invalid_argument("spectral_estimate: need 1 <= t <= n-1");
  double sum = 0;
  for (int k = 0; k < t; ++k) {
    double d = st.eigenvectors(i, k) - st.eigenvectors(j, k);
    sum += d * d / st.eigenvalues(k);
  }
  return sum;
}

template <class S>
double spectral_estimate(const WeightedMultigraph<S>& g, int t, VertexId i, VertexId j) {
  return spectral_estimate(spectral_prepare(g), t, i, j);
}

/*
 * Resistance sketch: rows of Q W^{1/2} B solved against L give k-dimensional
 * vertex vectors whose squared distances approximate resistances. Q has
 * +-1/sqrt(k) entries; k = ceil(c log n / eps^2).
 */
struct ResistanceSketch {
  Eigen::MatrixXd vectors;  // k x n; column i is vertex i's sketch vector
  int dimension = 0;
  std::uint64_t seed = 0;
};

struct SketchParams {
  double epsilon = 0.1;
  double c = 0.6;  // sketch-dimension constant
};

template <class S>
ResistanceSketch sketch_build(const WeightedMultigraph<S>& g, double epsilon, std::uint64_t seed,
                              double c = 0.6) {
  require_connected(g, "sketch_build");
  if (epsilon <= 0) throw std::invalid_argument("sketch_build: epsilon > 0 required");
  const int n = g.vertex_count();
  const int m = static_cast<int>(g.edge_count());
  const int k = static_cast<int>(std::ceil(c * std::log(static_cast<double>(n)) / (epsilon * epsilon)));

  // Y = Q W^{1/2} B accumulated edge by edge; Q entries are +-1/sqrt(k)
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(k, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(k));
  for (int e = 0; e < m; ++e) {
    const auto& edge = g.edges()[e];
    const double sw = std::sqrt(to_double(edge.conductance));
    for (int r = 0; r < k; ++r) {
      double q = (rng() & 1) ? scale : -scale;
      Y(r, edge.u) += q * sw;
      Y(r, edge.v) -= q * sw;
    }
  }
  // Z^T = L^+ Y^T via the grounded factorization (row space of Y is orthogonal
  // to ones only approximately; resistances use differences, so the grounded
  // solve's gauge does not matter)
  Eigen::MatrixXd L = laplacian_as_eigen(g);
  Eigen::MatrixXd Lg = L.topLeftCorner(n - 1, n - 1);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(Lg);
  if (ldlt.info() != Eigen::Success) throw numeric_error("sketch_build: factorization failed");
  ResistanceSketch sk;
  sk.vectors = Eigen::MatrixXd::Zero(k, n);
  Eigen::MatrixXd rhs = Y.leftCols(n - 1).transpose();  // (n-1) x k
  Eigen::MatrixXd sol = ldlt.solve(rhs);
  if (ldlt.info() != Eigen::Success) throw numeric_error("sketch_build: solve failed");
  sk.vectors.leftCols(n - 1) = sol.transpose();
  sk.dimension = k;
  sk.seed = seed;
  return sk;
}

inline double sketch_query(const ResistanceSketch& sk, VertexId i, VertexId j) {
  return (sk.vectors.col(i) - sk.vectors.col(j)).squaredNorm();
}

struct CommuteTimeEstimate {
  double mean_commute = 0;   // average round-trip steps
  double stderr_commute = 0; // standard error of the mean
  double resistance = 0;     // mean / (2 sum of weights)
  double resistance_stderr = 0;
};

/*
 * Monte Carlo commute time C(i,j): expected steps of a conductance-weighted
 * walk i -> j -> i, with C(i,j) = 2 W r(i,j).
 */
template <class S>
CommuteTimeEstimate commute_time_estimate(const WeightedMultigraph<S>& g, VertexId i, VertexId j,
                                          int walks, std::uint64_t seed) {
  require_connected(g, "commute_time_estimate");
  if (i == j || walks < 1) throw std::invalid_argument("commute_time_estimate: bad arguments");
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const auto& e : g.edges()) {
    double w = to_double(e.conductance);
    if (w <= 0) continue;
    adj[e.u].emplace_back(e.v, w);
    adj[e.v].emplace_back(e.u, w);
  }
  std::vector<std::vector<double>> cumulative(n);
  for (int v = 0; v < n; ++v) {
    double acc = 0;
    for (auto& [_, w] : adj[v]) cumulative[v].push_back(acc += w);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto walk_until = [&](int from, int target) -> long {
    long steps = 0;
    int cur = from;
    while (cur != target) {
      const auto& cum = cumulative[cur];
      double x = uni(rng) * cum.back();
      std::size_t pick = std::lower_bound(cum.begin(), cum.end(), x) - cum.begin();
      if (pick >= cum.size()) pick = cum.size() - 1;
      cur = adj[cur][pick].first;
      ++steps;
    }
    return steps;
  };
  double sum = 0, sumsq = 0;
  for (int w = 0; w < walks; ++w) {
    double trip = static_cast<double>(walk_until(i, j) + walk_until(j, i));
    sum += trip;
    sumsq += trip * trip;
  }
  CommuteTimeEstimate est;
  est.mean_commute = sum / walks;
  double var = walks > 1 ? (sumsq - sum * sum / walks) / (walks - 1) : 0.0;
  est.stderr_commute = std::sqrt(std::max(var, 0.0) / walks);
  double total_weight = to_double(g.total_conductance());
  est.resistance = est.mean_commute / (2 * total_weight);
  est.resistance_stderr = est.stderr_commute / (2 * total_weight);
  return est;
}

}  // namespace resistor
