#include "gsp/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gsp/rng.hpp"

namespace gsp {

namespace {

constexpr double kSignEps = 1e-9;
constexpr double kTieEps = 1e-9;
constexpr double kDefectiveCond = 1e10;

void check_finite(const Eigen::VectorXcd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) {
      throw Error(ErrorCode::InvalidArgument,
                  "signal entry " + std::to_string(i) + " is not finite");
    }
  }
}

// rotate each column so its first significant entry is real and positive;
// for real vectors this is the usual sign convention
void canonicalize_columns(Eigen::MatrixXcd& V) {
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    for (Eigen::Index r = 0; r < V.rows(); ++r) {
      const std::complex<double> x = V(r, c);
      const double m = std::abs(x);
      if (m > kSignEps) {
        V.col(c) *= std::conj(x) / m;
        break;
      }
    }
  }
}

void check_same_size(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a) + " vs " + std::to_string(b));
  }
}

// strict less-than with a tolerance band treated as equal
bool lt_eps(double a, double b) { return a < b - kTieEps; }

}  // namespace

GraphSignal::GraphSignal(Eigen::VectorXcd values) : values_(std::move(values)) {
  check_finite(values_);
}

GraphSignal::GraphSignal(const Eigen::VectorXd& values)
    : values_(values.cast<std::complex<double>>()) {
  check_finite(values_);
}

GraphSignal GraphSignal::unit_impulse(int n, int i) {
  if (i < 0 || i >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "impulse node " + std::to_string(i));
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  v(i) = 1.0;
  return GraphSignal(std::move(v));
}

SpectralBasis eigendecompose(const ShiftOperator& op) {
  const int n = op.size();
  if (n > kDenseThreshold) {
    throw Error(ErrorCode::TooLarge,
                "dense eigensolver capped at n = " +
                    std::to_string(kDenseThreshold) + ", got " +
                    std::to_string(n));
  }

  SpectralBasis basis;
  basis.kind = op.kind();
  basis.symmetric = op.symmetric();

  if (op.symmetric()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.dense());
    Eigen::MatrixXcd V = solver.eigenvectors().cast<std::complex<double>>();
    canonicalize_columns(V);
    basis.eigenvalues = solver.eigenvalues().cast<std::complex<double>>();
    basis.V = V;
    basis.F = V.transpose();
    basis.condition = 1.0;
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(
        op.dense().cast<std::complex<double>>());
    Eigen::MatrixXcd V = solver.eigenvectors();
    for (Eigen::Index c = 0; c < V.cols(); ++c) {
      const double nrm = V.col(c).norm();
      if (nrm > 0.0) V.col(c) /= nrm;
    }
    canonicalize_columns(V);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(V);
    const double rcond = lu.rcond();
    const double cond = rcond > 0.0 ? 1.0 / rcond
                                    : std::numeric_limits<double>::infinity();
    if (!(cond <= kDefectiveCond)) {
      throw Error(ErrorCode::Defective,
                  "eigenvector matrix numerically singular (cond estimate " +
                      std::to_string(cond) + "); distinct-eigenvalue "
                      "assumption violated");
    }
    basis.eigenvalues = solver.eigenvalues();
    basis.V = V;
    basis.F = lu.solve(Eigen::MatrixXcd::Identity(n, n));
    basis.condition = cond;
  }

  basis.ordering = order_frequencies(basis, op);
  return basis;
}

GraphSignal gft(const SpectralBasis& basis, const GraphSignal& s) {
  check_same_size(basis.size(), s.size());
  return GraphSignal(Eigen::VectorXcd(basis.F * s.values()));
}

GraphSignal igft(const SpectralBasis& basis, const GraphSignal& shat) {
  check_same_size(basis.size(), shat.size());
  return GraphSignal(Eigen::VectorXcd(basis.V * shat.values()));
}

double spectral_radius(const ShiftOperator& op) {
  if (op.symmetric()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        op.dense(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(
      op.dense().cast<std::complex<double>>(), false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

namespace {

double tv_against_radius(const ShiftOperator& op, const Eigen::VectorXcd& v,
                         double lambda_max) {
  const Eigen::VectorXcd shifted = op.apply(v) / lambda_max;
  return (v - shifted).cwiseAbs().sum();
}

}  // namespace

double total_variation(const ShiftOperator& op, const GraphSignal& v) {
  if (op.kind() != ShiftKind::Adjacency) {
    throw Error(ErrorCode::WrongKind,
                "total variation is defined against the adjacency shift");
  }
  check_same_size(op.size(), v.size());
  if (!(v.norm() > 0.0)) {
    throw Error(ErrorCode::ZeroVector, "total variation of the zero signal");
  }
  const double lambda_max = spectral_radius(op);
  if (!(lambda_max > 0.0)) {
    throw Error(ErrorCode::ZeroSpectralRadius,
                "adjacency has zero spectral radius");
  }
  return tv_against_radius(op, v.values(), lambda_max);
}

std::vector<int> order_frequencies(const SpectralBasis& basis,
                                   const ShiftOperator& op) {
  const int n = basis.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  // primary key per eigenpair; eigenvalue (Re, Im) then index break ties
  std::vector<double> key(static_cast<std::size_t>(n));
  if (basis.kind == ShiftKind::Adjacency) {
    const double lambda_max = basis.eigenvalues.cwiseAbs().maxCoeff();
    for (int k = 0; k < n; ++k) {
      key[static_cast<std::size_t>(k)] =
          lambda_max > 0.0 ? tv_against_radius(op, basis.V.col(k), lambda_max)
                           : 0.0;
    }
  } else {
    for (int k = 0; k < n; ++k) {
      key[static_cast<std::size_t>(k)] = basis.eigenvalues(k).real();
    }
  }

  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double ka = key[static_cast<std::size_t>(a)];
    const double kb = key[static_cast<std::size_t>(b)];
    if (lt_eps(ka, kb)) return true;
    if (lt_eps(kb, ka)) return false;
    const std::complex<double> la = basis.eigenvalues(a);
    const std::complex<double> lb = basis.eigenvalues(b);
    if (lt_eps(la.real(), lb.real())) return true;
    if (lt_eps(lb.real(), la.real())) return false;
    if (lt_eps(la.imag(), lb.imag())) return true;
    if (lt_eps(lb.imag(), la.imag())) return false;
    return a < b;
  });
  return order;
}

double rayleigh_quotient(const ShiftOperator& op, const GraphSignal& x) {
  if (!op.symmetric()) {
    throw Error(ErrorCode::NotSymmetric,
                "Rayleigh quotient needs a symmetric operator");
  }
  check_same_size(op.size(), x.size());
  const double denom = x.values().squaredNorm();
  if (!(denom > 0.0)) {
    throw Error(ErrorCode::ZeroVector, "Rayleigh quotient of the zero vector");
  }
  const std::complex<double> num = x.values().dot(op.apply(x.values()));
  return num.real() / denom;
}

double power_iteration_estimate(const ShiftOperator& op, int max_iters,
                                double tol) {
  const int n = op.size();
  Rng rng(0x9e3779b97f4a7c15ull);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = rng.normal();
  x.normalize();

  double lambda = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    Eigen::VectorXd y = op.sparse() * x;
    const double nrm = y.norm();
    if (nrm == 0.0) return 0.0;
    const double next = x.dot(y);
    x = y / nrm;
    if (it > 0 && std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next)))
      return next;
    lambda = next;
  }
  return lambda;
}

}  // namespace gsp
