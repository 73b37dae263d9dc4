#pragma once

#include <map>
#include <utility>
#include <vector>

#include "resistor/eigen_support.hpp"
#include "resistor/graph.hpp"
#include "resistor/matrix.hpp"

namespace resistor {

/*
 * Linear-algebra backend. The exact path inverts the grounded Laplacian
 * L(w|w) and reads resistances off the generalized inverse
 * H = [[L(w|w)^{-1}, 0], [0, 0]]; the Moore-Penrose route is float-only
 * (its projections are irrational in general).
 */
template <class S>
class GroundedInverse {
 public:
  GroundedInverse(const WeightedMultigraph<S>& g, VertexId ground)
      : ground_(ground), n_(g.vertex_count()) {
    require_connected(g, "GroundedInverse");
    auto L = build_laplacian(g);
    auto inv = try_invert(L.minor_matrix(ground, ground));
    if (!inv) throw disconnected_error("GroundedInverse: grounded Laplacian singular");
    inv_ = std::move(*inv);
  }

  VertexId ground() const { return ground_; }

  /// Entry of the embedded generalized inverse H (zero row/column at the ground).
  S h(VertexId a, VertexId b) const {
    if (a == ground_ || b == ground_) return S(0);
    return inv_(index(a), index(b));
  }

  /// (e_u - e_v)^T H (e_u - e_v).
  S resistance(VertexId u, VertexId v) const {
    if (u == v) return S(0);
    return h(u, u) + h(v, v) - h(u, v) - h(v, u);
  }

 private:
  std::size_t index(VertexId v) const { return static_cast<std::size_t>(v < ground_ ? v : v - 1); }
  VertexId ground_;
  int n_;
  Matrix<S> inv_;
};

template <class S>
S resistance_pseudoinverse(const WeightedMultigraph<S>& g, VertexId u, VertexId v) {
  if (u == v) return S(0);
  if constexpr (is_exact_v<S>) {
    GroundedInverse<S> gi(g, g.vertex_count() - 1);
    return gi.resistance(u, v);
  } else {
    require_connected(g, "resistance_pseudoinverse");
    Eigen::MatrixXd pinv = pseudo_inverse_psd(laplacian_as_eigen(g));
    return pinv(u, u) + pinv(v, v) - 2 * pinv(u, v);
  }
}

/// All-pairs resistance matrix: symmetric, zero diagonal.
template <class S>
Matrix<S> resistance_matrix(const WeightedMultigraph<S>& g) {
  const int n = g.vertex_count();
  Matrix<S> omega(n, n);
  if constexpr (is_exact_v<S>) {
    GroundedInverse<S> gi(g, n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) omega(i, j) = omega(j, i) = gi.resistance(i, j);
  } else {
    require_connected(g, "resistance_matrix");
    Eigen::MatrixXd pinv = pseudo_inverse_psd(laplacian_as_eigen(g));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        omega(i, j) = omega(j, i) = pinv(i, i) + pinv(j, j) - 2 * pinv(i, j);
  }
  return omega;
}

/*
 * Symmetric tridiagonal T = tridiag(b, a, b): theta/phi continuant
 * recurrences give T^{-1} entries and hence resistances when T is a
 * grounded Laplacian (path, cycle, fan grounded at the hub).
 */
template <class S>
struct TridiagonalSpec {
  std::vector<S> a;  // diagonal, length n
  std::vector<S> b;  // off-diagonal, length n-1
  std::vector<S> theta;  // theta_0..theta_n
  std::vector<S> phi;    // phi_1..phi_{n+1}, stored phi[i] = phi_i

  static TridiagonalSpec from_bands(std::vector<S> diag, std::vector<S> off) {
    const std::size_t n = diag.size();
    if (off.size() + 1 != n) throw std::invalid_argument("tridiagonal: band size mismatch");
    TridiagonalSpec spec;
    spec.a = std::move(diag);
    spec.b = std::move(off);
    spec.theta.assign(n + 1, S(0));
    spec.theta[0] = S(1);
    if (n >= 1) spec.theta[1] = spec.a[0];
    for (std::size_t i = 2; i <= n; ++i)
      spec.theta[i] =
          spec.a[i - 1] * spec.theta[i - 1] - spec.b[i - 2] * spec.b[i - 2] * spec.theta[i - 2];
    spec.phi.assign(n + 2, S(0));
    spec.phi[n + 1] = S(1);
    if (n >= 1) spec.phi[n] = spec.a[n - 1];
    for (std::size_t i = n - 1; i >= 1; --i)
      spec.phi[i] = spec.a[i - 1] * spec.phi[i + 1] - spec.b[i - 1] * spec.b[i - 1] * spec.phi[i + 2];
    return spec;
  }

  /// Grounded Laplacian L(w|w) of g must be tridiagonal under the natural order.
  static TridiagonalSpec from_grounded_laplacian(const WeightedMultigraph<S>& g, VertexId ground) {
    auto L = build_laplacian(g).minor_matrix(ground, ground);
    const std::size_t n = L.rows();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 2; j < n; ++j)
        if (L(i, j) != S(0))
          throw not_applicable("tridiagonal: grounded Laplacian is not tridiagonal");
    std::vector<S> diag(n), off(n ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) diag[i] = L(i, i);
    for (std::size_t i = 0; i + 1 < n; ++i) off[i] = L(i, i + 1);
    return from_bands(std::move(diag), std::move(off));
  }

  S det() const { return theta.back(); }

  /// T^{-1}(i,j), 0-based.
  S inverse_entry(std::size_t i, std::size_t j) const {
    if (theta.back() == S(0)) throw singular_error("tridiagonal: singular (theta_n = 0)");
    if (i > j) std::swap(i, j);
    S prod(1);
    for (std::size_t k = i; k < j; ++k) prod *= b[k];
    S sign = (j - i) % 2 == 0 ? S(1) : S(-1);
    return sign * prod * theta[i] * phi[j + 2] / theta.back();
  }
};

/*
 * r(i,j) for the graph whose grounded Laplacian is this tridiagonal matrix;
 * i, j are 0-based rows of the grounded matrix. Resistance to the ground
 * vertex itself is inverse_entry(i, i).
 */
template <class S>
S tridiag_resistance(const TridiagonalSpec<S>& spec, std::size_t i, std::size_t j) {
  if (i == j) return S(0);
  return spec.inverse_entry(i, i) + spec.inverse_entry(j, j) - S(2) * spec.inverse_entry(i, j);
}

template <class S>
S tridiag_resistance_to_ground(const TridiagonalSpec<S>& spec, std::size_t i) {
  return spec.inverse_entry(i, i);
}

/*
 * Symmetric pentadiagonal matrix. Sweet's seven-term recurrence computes
 * leading principal minors d_k; it requires every first-band entry to be
 * nonzero. Validated against dense determinants (the recurrence as
 * transcribed is specific to the symmetric case).
 */
template <class S>
struct PentadiagonalSpec {
  std::vector<S> a;   // diagonal, length n
  std::vector<S> b1;  // first band, length n-1
  std::vector<S> b2;  // second band, length n-2

  static PentadiagonalSpec from_matrix(const Matrix<S>& m) {
    const std::size_t n = m.rows();
    if (!m.is_symmetric()) throw not_applicable("pentadiagonal: matrix must be symmetric");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 3; j < n; ++j)
        if (m(i, j) != S(0)) throw not_applicable("pentadiagonal: bandwidth exceeds 2");
    PentadiagonalSpec spec;
    spec.a.resize(n);
    spec.b1.resize(n ? n - 1 : 0);
    spec.b2.resize(n >= 2 ? n - 2 : 0);
    for (std::size_t i = 0; i < n; ++i) spec.a[i] = m(i, i);
    for (std::size_t i = 0; i + 1 < n; ++i) spec.b1[i] = m(i, i + 1);
    for (std::size_t i = 0; i + 2 < n; ++i) spec.b2[i] = m(i, i + 2);
    return spec;
  }

  Matrix<S> to_matrix() const {
    const std::size_t n = a.size();
    Matrix<S> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = a[i];
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = b1[i];
    for (std::size_t i = 0; i + 2 < n; ++i) m(i, i + 2) = m(i + 2, i) = b2[i];
    return m;
  }

  bool unit_negative_offdiagonals() const {
    for (const auto& x : b1)
      if (x != S(-1)) return false;
    for (const auto& x : b2)
      if (x != S(-1)) return false;
    return true;
  }
};

/// The straight-linear-2-tree grounded matrix M_n ((n-2) x (n-2)).
template <class S>
PentadiagonalSpec<S> straight_2tree_grounded_matrix(int n) {
  if (n < 5) throw std::invalid_argument("M_n defined for n >= 5 here");
  PentadiagonalSpec<S> spec;
  const std::size_t sz = static_cast<std::size_t>(n - 2);
  spec.a.resize(sz);
  spec.b1.assign(sz - 1, S(-1));
  spec.b2.assign(sz - 2, S(-1));
  for (std::size_t i = 0; i < sz; ++i) spec.a[i] = S(i == 0 ? 2 : (i == 1 ? 3 : 4));
  return spec;
}

template <class S>
S sweet_pentadiagonal_det(const PentadiagonalSpec<S>& spec) {
  const std::size_t n = spec.a.size();
  for (const auto& x : spec.b1)
    if (x == S(0))
      throw not_applicable("sweet: zero first-band entry; use the dense determinant");
  auto dense = [&](std::size_t k) {
    Matrix<S> m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      m(i, i) = spec.a[i];
      if (i + 1 < k) m(i, i + 1) = m(i + 1, i) = spec.b1[i];
      if (i + 2 < k) m(i, i + 2) = m(i + 2, i) = spec.b2[i];
    }
    return determinant(m);
  };
  if (n <= 5) return dense(n);

  // d[k] = det of the leading k x k minor; seeds by dense minors.
  std::vector<S> d(n + 1);
  d[0] = S(1);
  for (std::size_t k = 1; k <= 5; ++k) d[k] = dense(k);

  if (spec.unit_negative_offdiagonals()) {
    // simplified form: d_k = (a_k+1)d_{k-1} - (1+a_{k-1})(d_{k-2}+d_{k-3}) + (1+a_{k-2})d_{k-4} - d_{k-5}
    for (std::size_t k = 6; k <= n; ++k) {
      const S& ak = spec.a[k - 1];
      const S& ak1 = spec.a[k - 2];
      const S& ak2 = spec.a[k - 3];
      d[k] = (ak + S(1)) * d[k - 1] - (S(1) + ak1) * (d[k - 2] + d[k - 3]) +
             (S(1) + ak2) * d[k - 4] - d[k - 5];
    }
    return d[n];
  }

  // general symmetric case; b_i, beta_i, c_i are the symmetric entry products (1-based)
  auto A = [&](std::size_t i) { return spec.a[i - 1]; };
  auto B = [&](std::size_t i) { return spec.b1[i - 1] * spec.b1[i - 1]; };
  auto Beta = [&](std::size_t i) { return spec.b2[i - 1] * spec.b2[i - 1]; };
  auto C = [&](std::size_t i) { return spec.b1[i - 1] * spec.b1[i] * spec.b2[i - 1]; };
  for (std::size_t k = 6; k <= n; ++k) {
    S cb = C(k - 2) / B(k - 2);
    d[k] = (A(k) - cb) * d[k - 1] - (B(k - 1) - A(k - 1) * cb) * d[k - 2] -
           (Beta(k - 2) * A(k - 1) - C(k - 2)) * d[k - 3] +
           Beta(k - 3) * (Beta(k - 2) - A(k - 2) * cb) * d[k - 4] +
           Beta(k - 3) * Beta(k - 4) * cb * d[k - 5];
  }
  return d[n];
}

/// Exact determinant (fraction-free) / exact solve; float falls back to LU.
template <class S>
S exact_dense_determinant(const Matrix<S>& m) {
  return determinant(m);
}

template <class S>
std::optional<std::vector<S>> exact_solve(const Matrix<S>& m, const std::vector<S>& rhs) {
  return try_solve(m, rhs);
}

}  // namespace resistor
