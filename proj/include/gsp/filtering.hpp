#pragma once

#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "gsp/spectral.hpp"

namespace gsp {

enum class KernelKind {
  IdealLowPass,
  IdealHighPass,
  Heat,
  Tikhonov,
  Polynomial,
  Custom,
};

/// Scalar frequency response h(lambda). Analytic kernels (heat, Tikhonov,
/// polynomial) evaluate anywhere in the complex plane; ideal cutoffs and
/// tabulated kernels are defined for real frequencies only and reject
/// complex spectra.
class FilterKernel {
 public:
  static FilterKernel identity();  // h == 1
  static FilterKernel ideal_low_pass(double cutoff);
  static FilterKernel ideal_high_pass(double cutoff);
  static FilterKernel heat(double t);
  static FilterKernel tikhonov(double gamma);  // 1 / (1 + gamma lambda)
  static FilterKernel polynomial(std::vector<double> coeffs);  // sum h_m l^m
  // sorted (lambda, gain) pairs, linearly interpolated
  static FilterKernel custom(std::vector<std::pair<double, double>> points);

  KernelKind kind() const noexcept { return kind_; }
  double param() const noexcept { return param_; }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  const std::vector<std::pair<double, double>>& points() const noexcept {
    return points_;
  }
  // interval of validity
  double lambda_min() const noexcept { return lo_; }
  double lambda_max() const noexcept { return hi_; }

  double evaluate(double lambda) const;
  std::complex<double> evaluate(std::complex<double> lambda) const;

 private:
  FilterKernel(KernelKind kind, double param) : kind_(kind), param_(param) {}

  KernelKind kind_;
  double param_ = 0.0;  // cutoff, t, or gamma depending on kind
  std::vector<double> coeffs_;
  std::vector<std::pair<double, double>> points_;
  double lo_ = -std::numeric_limits<double>::infinity();
  double hi_ = std::numeric_limits<double>::infinity();
};

/// Truncated Chebyshev series of a kernel on [0, lambda_ub], stored so that
/// h(lambda) ~ sum_k c_k T_k(2 lambda / lambda_ub - 1).
struct ChebyshevFilter {
  std::vector<double> coefficients;  // c_0 .. c_K
  double lambda_ub = 0.0;

  int degree() const noexcept {
    return static_cast<int>(coefficients.size()) - 1;
  }
  double evaluate(double lambda) const;  // Clenshaw
};

/// Spectral-domain filtering: V diag(h(lambda_k)) F s.
GraphSignal apply_exact(const SpectralBasis& basis, const FilterKernel& kernel,
                        const GraphSignal& s);

/// Vertex-domain polynomial filtering sum_m h_m A^m s, evaluated Horner
/// style with one sparse mat-vec per degree. Degree is capped at n - 1.
GraphSignal apply_polynomial(const ShiftOperator& op,
                             const std::vector<double>& coeffs,
                             const GraphSignal& s);

/// Fit a degree-K Chebyshev series to the kernel on [0, lambda_ub] by
/// Chebyshev-Gauss quadrature at max(K + 1, 64) points. Exact for
/// polynomial kernels of degree <= K.
ChebyshevFilter chebyshev_fit(const FilterKernel& kernel, int degree,
                              double lambda_ub);

/// Evaluate the fitted series on the operator via the three-term recurrence
/// on (2 / lambda_ub) L - I, using exactly `degree` sparse mat-vecs. The
/// operator must be a Laplacian with spectrum inside [0, lambda_ub]; the
/// bound is checked with a power-iteration estimate, never a full
/// decomposition.
GraphSignal chebyshev_apply(const ShiftOperator& op, const ChebyshevFilter& f,
                            const GraphSignal& s);

/// Default series interval for an operator: exactly 2 for the normalized
/// Laplacian, otherwise a power-iteration estimate inflated by 1%.
double default_lambda_ub(const ShiftOperator& op);

/// Filter response to a unit impulse at node i.
GraphSignal impulse_response(const ShiftOperator& op,
                             const FilterKernel& kernel, int i);
GraphSignal impulse_response(const ShiftOperator& op, const ChebyshevFilter& f,
                             int i);

/// True iff H commutes with the shift within tol (relative Frobenius).
bool check_shift_invariance(const ShiftOperator& op, const Eigen::MatrixXd& H,
                            double tol);

}  // namespace gsp
