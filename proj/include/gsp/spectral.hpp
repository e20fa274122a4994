#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "gsp/graph.hpp"

namespace gsp {

/// One scalar per node. Values are kept complex so vertex-domain signals and
/// spectra share a type; real signals simply carry zero imaginary parts.
class GraphSignal {
 public:
  GraphSignal() = default;
  explicit GraphSignal(Eigen::VectorXcd values);
  explicit GraphSignal(const Eigen::VectorXd& values);

  static GraphSignal zeros(int n) {
    return GraphSignal(Eigen::VectorXcd::Zero(n));
  }
  static GraphSignal unit_impulse(int n, int i);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  const Eigen::VectorXcd& values() const noexcept { return values_; }
  std::complex<double> operator[](int i) const { return values_(i); }

  double norm() const { return values_.norm(); }
  // real part; callers use this when the signal is known real
  Eigen::VectorXd real() const { return values_.real(); }
  double max_imag() const {
    return values_.size() == 0 ? 0.0 : values_.imag().cwiseAbs().maxCoeff();
  }

 private:
  Eigen::VectorXcd values_;
};

/// Eigendecomposition of a shift operator: shift = V diag(eigenvalues) F
/// with F = V^{-1} (F = V^T for the symmetric case). `ordering` lists
/// eigenvalue indices from lowest to highest graph frequency.
struct SpectralBasis {
  Eigen::VectorXcd eigenvalues;  // solver order
  Eigen::MatrixXcd V;            // eigenvectors as columns, unit norm
  Eigen::MatrixXcd F;            // forward transform V^{-1}
  std::vector<int> ordering;     // frequency order, low to high
  double condition = 1.0;        // condition estimate of V
  ShiftKind kind = ShiftKind::Adjacency;
  bool symmetric = false;

  int size() const noexcept { return static_cast<int>(eigenvalues.size()); }
  // k-th lowest frequency, following `ordering`
  std::complex<double> ordered_eigenvalue(int k) const {
    return eigenvalues(ordering[static_cast<std::size_t>(k)]);
  }
};

/// Dense eigendecomposition (symmetric solver when the operator is
/// symmetric, complex general solver otherwise). Non-symmetric operators
/// whose eigenvector matrix is numerically singular are rejected rather
/// than Jordan-decomposed.
SpectralBasis eigendecompose(const ShiftOperator& op);

/// Forward transform: shat = F s.
GraphSignal gft(const SpectralBasis& basis, const GraphSignal& s);

/// Inverse transform: s = V shat.
GraphSignal igft(const SpectralBasis& basis, const GraphSignal& shat);

/// l1 total variation of v against the adjacency normalized by its spectral
/// radius: || v - (A / lambda_max) v ||_1.
double total_variation(const ShiftOperator& op, const GraphSignal& v);

/// Frequency ordering of a basis: Laplacians by ascending eigenvalue,
/// adjacency by ascending total variation of the eigenvectors. Ties resolve
/// by (Re, Im) of the eigenvalue, then original index.
std::vector<int> order_frequencies(const SpectralBasis& basis,
                                   const ShiftOperator& op);

/// x^T L x / x^T x for a symmetric operator.
double rayleigh_quotient(const ShiftOperator& op, const GraphSignal& x);

/// Maximum-modulus eigenvalue. Dense sizes only.
double spectral_radius(const ShiftOperator& op);

/// Largest-eigenvalue estimate for a symmetric positive semidefinite
/// operator via power iteration (deterministic start vector). Converges
/// from below; callers inflate it when an upper bound is needed.
double power_iteration_estimate(const ShiftOperator& op, int max_iters = 500,
                                double tol = 1e-12);

}  // namespace gsp
