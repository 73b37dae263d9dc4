#pragma once

#include <Eigen/Dense>

#include "resistor/errors.hpp"
#include "resistor/graph.hpp"

namespace resistor {

template <class S>
Eigen::MatrixXd laplacian_as_eigen(const WeightedMultigraph<S>& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    double w = to_double(e.conductance);
    L(e.u, e.u) += w;
    L(e.v, e.v) += w;
    L(e.u, e.v) -= w;
    L(e.v, e.u) -= w;
  }
  return L;
}

struct LaplacianEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns
};

inline LaplacianEigen eigendecompose(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.info() != Eigen::Success) throw numeric_error("eigendecomposition failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

/*
 * Moore-Penrose pseudoinverse of a PSD matrix; eigenvalues below
 * 1e-9 * lambda_max are treated as the null space.
 */
inline Eigen::MatrixXd pseudo_inverse_psd(const Eigen::MatrixXd& sym) {
  auto eig = eigendecompose(sym);
  const double cutoff = 1e-9 * eig.values.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv = eig.values;
  for (int k = 0; k < inv.size(); ++k) inv(k) = std::abs(inv(k)) > cutoff ? 1.0 / inv(k) : 0.0;
  return eig.vectors * inv.asDiagonal() * eig.vectors.transpose();
}

}  // namespace resistor
