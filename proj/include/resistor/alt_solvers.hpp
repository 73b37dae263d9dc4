#pragma once

#include <map>
#include <utility>
#include <vector>

#include "resistor/eigen_support.hpp"
#include "resistor/graph.hpp"
#include "resistor/matrix.hpp"

namespace resistor {

/*
 * The three remaining exact formulations: local sum rules, energy
 * minimization, and the simplex embedding (float).
 */

/// Partition of unordered vertex pairs into equivalence classes.
struct OrbitPartition {
  std::vector<std::vector<std::pair<VertexId, VertexId>>> classes;

  static OrbitPartition trivial(int n) {
    OrbitPartition p;
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = i + 1; j < n; ++j) p.classes.push_back({{i, j}});
    return p;
  }

  void validate(int n) const {
    std::vector<std::vector<int>> seen(n, std::vector<int>(n, 0));
    for (const auto& cls : classes)
      for (auto [i, j] : cls) {
        if (i == j || i < 0 || j < 0 || i >= n || j >= n)
          throw std::invalid_argument("orbit partition: bad pair");
        ++seen[std::min(i, j)][std::max(i, j)];
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (seen[i][j] != 1)
          throw std::invalid_argument("orbit partition: pairs must be covered exactly once");
  }

  std::size_t class_of(VertexId i, VertexId j) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (auto [a, b] : classes[c])
        if ((a == i && b == j) || (a == j && b == i)) return c;
    throw std::invalid_argument("orbit partition: pair not covered");
  }
};

/*
 * Local sum rules (unit weights): for each ordered pair (u,v)
 *   deg(u) r(u,v) + sum_{z in N(u)} [r(u,z) - r(v,z)] = 2.
 * Exact mode selects a full-rank square subsystem by incremental
 * elimination over the equations in deterministic order; float mode
 * solves the over-determined system by least squares.
 */
template <class S>
Matrix<S> local_rules_solve(const WeightedMultigraph<S>& g, const OrbitPartition& orbits) {
  require_connected(g, "local_rules_solve");
  for (const auto& e : g.edges())
    if (e.conductance != S(1))
      throw std::invalid_argument("local_rules_solve: unit edge weights required");
  const int n = g.vertex_count();
  orbits.validate(n);
  const std::size_t m = orbits.classes.size();

  // pair -> class lookup
  std::vector<std::vector<std::size_t>> cls(n, std::vector<std::size_t>(n, 0));
  for (std::size_t c = 0; c < m; ++c)
    for (auto [a, b] : orbits.classes[c]) cls[a][b] = cls[b][a] = c;

  auto equation_row = [&](VertexId u, VertexId v) {
    std::vector<S> row(m, S(0));
    auto nb = g.neighbors(u);
    row[cls[u][v]] += S(static_cast<long>(g.degree(u)));
    for (VertexId z : nb) {
      if (z != u) row[cls[u][z]] += S(1);
      if (z != v) row[cls[v][z]] -= S(1);
    }
    return row;
  };

  if constexpr (is_exact_v<S>) {
    // incremental row reduction; keep equations that raise the rank
    Matrix<S> basis(m, m);
    std::vector<S> rhs(m, S(0));
    std::vector<int> pivot_col(m, -1);
    std::size_t rank = 0;
    for (VertexId u = 0; u < n && rank < m; ++u)
      for (VertexId v = 0; v < n && rank < m; ++v) {
        if (u == v) continue;
        auto row = equation_row(u, v);
        S b = S(2);
        // eliminate against current basis
        for (std::size_t r = 0; r < rank; ++r) {
          const S& f = row[pivot_col[r]];
          if (f == S(0)) continue;
          S factor = f;
          for (std::size_t c = 0; c < m; ++c) row[c] -= factor * basis(r, c);
          b -= factor * rhs[r];
        }
        int pc = -1;
        for (std::size_t c = 0; c < m; ++c)
          if (row[c] != S(0)) {
            pc = static_cast<int>(c);
            break;
          }
        if (pc < 0) continue;  // dependent equation
        S piv = row[pc];
        for (std::size_t c = 0; c < m; ++c) row[c] /= piv;
        b /= piv;
        for (std::size_t c = 0; c < m; ++c) basis(rank, c) = row[c];
        rhs[rank] = b;
        pivot_col[rank] = pc;
        ++rank;
      }
    if (rank < m)
      throw inconsistency_error("local_rules_solve: system is rank-deficient (bad orbit partition?)");
    // back-substitute (basis is in row-echelon form with unit pivots)
    std::vector<S> x(m, S(0));
    for (std::size_t r = rank; r-- > 0;) {
      S val = rhs[r];
      for (std::size_t c = 0; c < m; ++c)
        if (static_cast<int>(c) != pivot_col[r] && basis(r, c) != S(0)) val -= basis(r, c) * x[c];
      x[pivot_col[r]] = val;
    }
    Matrix<S> omega(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) omega(i, j) = omega(j, i) = x[cls[i][j]];
    return omega;
  } else {
    std::vector<std::vector<S>> rows;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        if (u != v) rows.push_back(equation_row(u, v));
    Eigen::MatrixXd A(rows.size(), m);
    Eigen::VectorXd b = Eigen::VectorXd::Constant(rows.size(), 2.0);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < m; ++c) A(r, c) = rows[r][c];
    Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
    double residual = (A * x - b).norm();
    if (residual > 1e-6 * std::max(1.0, b.norm()))
      throw inconsistency_error("local_rules_solve: least-squares residual too large");
    Matrix<S> omega(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) omega(i, j) = omega(j, i) = x(cls[i][j]);
    return omega;
  }
}

template <class S>
struct EnergyMinResult {
  S resistance;
  std::vector<S> potentials;  // x with x_u = 1, x_v = 0
};

/*
 * 1/r(u,v) = min over potentials with x_u - x_v = 1 of sum w_ij (x_i-x_j)^2.
 * Gauge x_v = 0; the zero-gradient system is the grounded Laplacian solve.
 */
template <class S>
EnergyMinResult<S> energy_min_resistance(const WeightedMultigraph<S>& g, VertexId u, VertexId v) {
  require_connected(g, "energy_min_resistance");
  if (u == v) throw std::invalid_argument("energy_min_resistance: u == v");
  const int n = g.vertex_count();
  auto L = build_laplacian(g);
  // unknowns: all vertices except u and v
  std::vector<int> unknown;
  for (int w = 0; w < n; ++w)
    if (w != u && w != v) unknown.push_back(w);
  const std::size_t k = unknown.size();
  Matrix<S> A(k, k);
  std::vector<S> rhs(k, S(0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) A(r, c) = L(unknown[r], unknown[c]);
    rhs[r] = S(0) - L(unknown[r], u);  // x_u = 1 contribution moved right
  }
  std::vector<S> x(n, S(0));
  x[u] = S(1);
  if (k > 0) {
    auto sol = try_solve(A, rhs);
    if (!sol) throw singular_error("energy_min_resistance: interior system singular");
    for (std::size_t r = 0; r < k; ++r) x[unknown[r]] = (*sol)[r];
  }
  S energy(0);
  for (const auto& e : g.edges()) {
    S d = x[e.u] - x[e.v];
    energy += e.conductance * d * d;
  }
  if (energy == S(0)) throw singular_error("energy_min_resistance: zero energy");
  return {S(1) / energy, std::move(x)};
}

/*
 * Simplex embedding (float): coordinates (s_i)_k = (z_k)_i / sqrt(mu_k)
 * over the n-1 nonzero eigenpairs; squared distances reproduce
 * resistances and the vertex set is centered at the origin.
 */
struct SimplexEmbedding {
  Eigen::MatrixXd coords;      // n x (n-1); row i = s_i
  Eigen::VectorXd eigenvalues; // the n-1 nonzero eigenvalues, ascending
  bool centered = true;
};

template <class S>
SimplexEmbedding simplex_embed(const WeightedMultigraph<S>& g) {
  require_connected(g, "simplex_embed");
  const int n = g.vertex_count();
  auto eig = eigendecompose(laplacian_as_eigen(g));
  const double cutoff = 1e-9 * eig.values.cwiseAbs().maxCoeff();
  SimplexEmbedding emb;
  emb.coords = Eigen::MatrixXd::Zero(n, n - 1);
  emb.eigenvalues = Eigen::VectorXd::Zero(n - 1);
  int col = 0;
  for (int k = 0; k < n; ++k) {
    if (std::abs(eig.values(k)) <= cutoff) continue;
    if (col >= n - 1) throw numeric_error("simplex_embed: too many nonzero eigenvalues");
    emb.eigenvalues(col) = eig.values(k);
    emb.coords.col(col) = eig.vectors.col(k) / std::sqrt(eig.values(k));
    ++col;
  }
  if (col != n - 1) throw numeric_error("simplex_embed: unexpected Laplacian rank");
  return emb;
}

inline double simplex_resistance(const SimplexEmbedding& emb, VertexId i, VertexId j) {
  return (emb.coords.row(i) - emb.coords.row(j)).squaredNorm();
}

struct FiedlerCheck {
  double max_residual;
  double circumradius;
  Eigen::VectorXd circumcenter_weights;  // the r vector
};

/*
 * Fiedler's identity: -1/2 [[0, u^T],[u, Omega]] = [[4R^2, -2r^T],[-2r, L]]^{-1}
 * with r = 1/2 L zeta + u/n, zeta = diag(L+), R = sqrt(1/2 zeta^T (r + u/n)).
 * The convention (r a column vector, R^2 a scalar product) is the one that
 * drives the residual to roundoff.
 */
template <class S>
FiedlerCheck fiedler_identity_check(const WeightedMultigraph<S>& g) {
  require_connected(g, "fiedler_identity_check");
  const int n = g.vertex_count();
  Eigen::MatrixXd L = laplacian_as_eigen(g);
  Eigen::MatrixXd Ldag = pseudo_inverse_psd(L);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd zeta = Ldag.diagonal();
  Eigen::VectorXd r = 0.5 * L * zeta + ones / n;
  double R2 = 0.5 * zeta.dot(r + ones / n);
  if (R2 <= 0) throw numeric_error("fiedler_identity_check: nonpositive R^2");

  Eigen::MatrixXd omega(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) omega(i, j) = Ldag(i, i) + Ldag(j, j) - 2 * Ldag(i, j);

  Eigen::MatrixXd lhs(n + 1, n + 1);
  lhs(0, 0) = 0;
  lhs.block(0, 1, 1, n) = ones.transpose();
  lhs.block(1, 0, n, 1) = ones;
  lhs.block(1, 1, n, n) = omega;
  lhs *= -0.5;

  Eigen::MatrixXd block(n + 1, n + 1);
  block(0, 0) = 4 * R2;
  block.block(0, 1, 1, n) = -2 * r.transpose();
  block.block(1, 0, n, 1) = -2 * r;
  block.block(1, 1, n, n) = L;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(block);
  if (!lu.isInvertible()) throw numeric_error("fiedler_identity_check: block matrix singular");
  Eigen::MatrixXd rhs = lu.inverse();

  return {(lhs - rhs).cwiseAbs().maxCoeff(), std::sqrt(R2), r};
}

}  // namespace resistor
