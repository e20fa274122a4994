#include "gsp/filtering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gsp {

namespace {

// eigenvalues this close to an ideal cutoff count as inside the pass band
constexpr double kCutoffEps = 1e-9;
// largest imaginary part a "real" frequency may carry
constexpr double kImagEps = 1e-9;

void check_same_size(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

FilterKernel FilterKernel::identity() {
  return polynomial(std::vector<double>{1.0});
}

FilterKernel FilterKernel::ideal_low_pass(double cutoff) {
  if (!std::isfinite(cutoff)) {
    throw Error(ErrorCode::InvalidKernel, "cutoff must be finite");
  }
  return FilterKernel(KernelKind::IdealLowPass, cutoff);
}

FilterKernel FilterKernel::ideal_high_pass(double cutoff) {
  if (!std::isfinite(cutoff)) {
    throw Error(ErrorCode::InvalidKernel, "cutoff must be finite");
  }
  return FilterKernel(KernelKind::IdealHighPass, cutoff);
}

FilterKernel FilterKernel::heat(double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::InvalidKernel, "heat scale must be >= 0");
  }
  return FilterKernel(KernelKind::Heat, t);
}

FilterKernel FilterKernel::tikhonov(double gamma) {
  if (!(gamma >= 0.0)) {
    throw Error(ErrorCode::InvalidKernel, "tikhonov gamma must be >= 0");
  }
  return FilterKernel(KernelKind::Tikhonov, gamma);
}

FilterKernel FilterKernel::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) {
    throw Error(ErrorCode::InvalidKernel, "polynomial needs coefficients");
  }
  for (double c : coeffs) {
    if (!std::isfinite(c)) {
      throw Error(ErrorCode::InvalidKernel, "non-finite coefficient");
    }
  }
  FilterKernel k(KernelKind::Polynomial, 0.0);
  k.coeffs_ = std::move(coeffs);
  return k;
}

FilterKernel FilterKernel::custom(
    std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw Error(ErrorCode::InvalidKernel, "custom kernel needs >= 2 points");
  }
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].first) || !std::isfinite(points[i].second)) {
      throw Error(ErrorCode::InvalidKernel, "non-finite table entry");
    }
    if (i > 0 && points[i].first <= points[i - 1].first) {
      throw Error(ErrorCode::InvalidKernel, "duplicate frequency in table");
    }
  }
  FilterKernel k(KernelKind::Custom, 0.0);
  k.lo_ = points.front().first;
  k.hi_ = points.back().first;
  k.points_ = std::move(points);
  return k;
}

double FilterKernel::evaluate(double lambda) const {
  switch (kind_) {
    case KernelKind::IdealLowPass:
      return lambda <= param_ + kCutoffEps ? 1.0 : 0.0;
    case KernelKind::IdealHighPass:
      return lambda <= param_ + kCutoffEps ? 0.0 : 1.0;
    case KernelKind::Heat:
      return std::exp(-param_ * lambda);
    case KernelKind::Tikhonov:
      return 1.0 / (1.0 + param_ * lambda);
    case KernelKind::Polynomial: {
      double acc = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lambda + *it;
      return acc;
    }
    case KernelKind::Custom: {
      if (lambda < lo_ - kCutoffEps || lambda > hi_ + kCutoffEps) {
        throw Error(ErrorCode::KernelDomain,
                    "frequency " + std::to_string(lambda) +
                        " outside tabulated range");
      }
      const double x = std::clamp(lambda, lo_, hi_);
      auto hi_it = std::lower_bound(
          points_.begin(), points_.end(), x,
          [](const std::pair<double, double>& p, double v) {
            return p.first < v;
          });
      if (hi_it == points_.begin()) return hi_it->second;
      if (hi_it == points_.end()) return points_.back().second;
      const auto lo_it = hi_it - 1;
      const double t = (x - lo_it->first) / (hi_it->first - lo_it->first);
      return (1.0 - t) * lo_it->second + t * hi_it->second;
    }
  }
  return 0.0;
}

std::complex<double> FilterKernel::evaluate(std::complex<double> lambda) const {
  switch (kind_) {
    case KernelKind::Heat:
      return std::exp(-param_ * lambda);
    case KernelKind::Tikhonov: {
      const std::complex<double> denom = 1.0 + param_ * lambda;
      if (std::abs(denom) < 1e-300) {
        throw Error(ErrorCode::KernelDomain, "tikhonov pole at eigenvalue");
      }
      return 1.0 / denom;
    }
    case KernelKind::Polynomial: {
      std::complex<double> acc = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lambda + *it;
      return acc;
    }
    default:
      if (std::abs(lambda.imag()) > kImagEps) {
        throw Error(ErrorCode::KernelDomain,
                    "kernel is defined for real frequencies only; got "
                    "complex eigenvalue");
      }
      return evaluate(lambda.real());
  }
}

GraphSignal apply_exact(const SpectralBasis& basis, const FilterKernel& kernel,
                        const GraphSignal& s) {
  const int n = basis.size();
  check_same_size(n, s.size());
  if (kernel.kind() == KernelKind::Polynomial &&
      static_cast<int>(kernel.coefficients().size()) > n) {
    throw Error(ErrorCode::DegreeTooHigh,
                "polynomial kernel degree exceeds n - 1");
  }
  Eigen::VectorXcd gains(n);
  for (int k = 0; k < n; ++k) {
    const std::complex<double> lambda = basis.eigenvalues(k);
    if (lambda.real() < kernel.lambda_min() - kCutoffEps ||
        lambda.real() > kernel.lambda_max() + kCutoffEps) {
      throw Error(ErrorCode::KernelDomain,
                  "eigenvalue " + std::to_string(lambda.real()) +
                      " outside kernel interval");
    }
    gains(k) = kernel.evaluate(lambda);
  }
  const Eigen::VectorXcd shat = basis.F * s.values();
  return GraphSignal(
      Eigen::VectorXcd(basis.V * gains.cwiseProduct(shat)));
}

GraphSignal apply_polynomial(const ShiftOperator& op,
                             const std::vector<double>& coeffs,
                             const GraphSignal& s) {
  const int n = op.size();
  check_same_size(n, s.size());
  if (coeffs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
  }
  if (static_cast<int>(coeffs.size()) > n) {
    throw Error(ErrorCode::DegreeTooHigh,
                "degree " + std::to_string(coeffs.size() - 1) +
                    " exceeds n - 1 = " + std::to_string(n - 1));
  }
  // Horner: acc = h_M s; acc = A acc + h_m s
  Eigen::VectorXcd acc = coeffs.back() * s.values();
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    acc = op.apply(acc);
    acc += *it * s.values();
  }
  return GraphSignal(std::move(acc));
}

ChebyshevFilter chebyshev_fit(const FilterKernel& kernel, int degree,
                              double lambda_ub) {
  if (degree < 0) {
    throw Error(ErrorCode::InvalidArgument, "degree must be >= 0");
  }
  if (!(lambda_ub > 0.0) || !std::isfinite(lambda_ub)) {
    throw Error(ErrorCode::InvalidInterval, "lambda_ub must be positive");
  }
  if (kernel.lambda_min() > 0.0 || kernel.lambda_max() < lambda_ub) {
    throw Error(ErrorCode::InvalidInterval,
                "kernel not defined on all of [0, lambda_ub]");
  }

  const int quad = std::max(degree + 1, 64);
  std::vector<double> samples(static_cast<std::size_t>(quad));
  std::vector<double> thetas(static_cast<std::size_t>(quad));
  for (int m = 0; m < quad; ++m) {
    const double theta = M_PI * (m + 0.5) / quad;
    thetas[static_cast<std::size_t>(m)] = theta;
    const double lambda = 0.5 * lambda_ub * (std::cos(theta) + 1.0);
    samples[static_cast<std::size_t>(m)] = kernel.evaluate(lambda);
  }

  ChebyshevFilter f;
  f.lambda_ub = lambda_ub;
  f.coefficients.resize(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    double sum = 0.0;
    for (int m = 0; m < quad; ++m) {
      sum += samples[static_cast<std::size_t>(m)] *
             std::cos(k * thetas[static_cast<std::size_t>(m)]);
    }
    // store the series directly summable as sum c_k T_k (c_0 pre-halved)
    f.coefficients[static_cast<std::size_t>(k)] =
        (k == 0 ? 1.0 : 2.0) * sum / quad;
  }
  return f;
}

double ChebyshevFilter::evaluate(double lambda) const {
  const double x = 2.0 * lambda / lambda_ub - 1.0;
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = coefficients.size(); k-- > 1;) {
    const double b0 = 2.0 * x * b1 - b2 + coefficients[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + coefficients[0];
}

GraphSignal chebyshev_apply(const ShiftOperator& op, const ChebyshevFilter& f,
                            const GraphSignal& s) {
  const int n = op.size();
  check_same_size(n, s.size());
  if (op.kind() == ShiftKind::Adjacency || !op.symmetric()) {
    throw Error(ErrorCode::NotSymmetric,
                "Chebyshev filtering runs on symmetric Laplacian operators");
  }
  if (f.coefficients.empty() || !(f.lambda_ub > 0.0)) {
    throw Error(ErrorCode::InvalidInterval, "empty or invalid series");
  }
  const double estimate = power_iteration_estimate(op);
  if (estimate > f.lambda_ub * (1.0 + 1e-9)) {
    throw Error(ErrorCode::SpectrumExceedsBound,
                "spectrum estimate " + std::to_string(estimate) +
                    " exceeds series bound " + std::to_string(f.lambda_ub));
  }

  const double scale = 2.0 / f.lambda_ub;
  const auto shifted = [&](const Eigen::VectorXcd& x) {
    // (2 / lambda_ub) L x - x
    Eigen::VectorXcd y = op.apply(x);
    y = scale * y - x;
    return y;
  };

  // three-term recurrence; one mat-vec per degree
  Eigen::VectorXcd t_prev = s.values();
  Eigen::VectorXcd acc = f.coefficients[0] * t_prev;
  if (f.degree() >= 1) {
    Eigen::VectorXcd t_cur = shifted(t_prev);
    acc += f.coefficients[1] * t_cur;
    for (int k = 2; k <= f.degree(); ++k) {
      Eigen::VectorXcd t_next = 2.0 * shifted(t_cur) + ... t_prev;
      t_prev = std::move(t_cur);
      t_cur = std::move(t_next);
      acc += f.coefficients[static_cast<std::size_t>(k)] * t_cur;
    }
  }
  return GraphSignal(std::move(acc));
}

double default_lambda_ub(const ShiftOperator& op) {
  if (op.kind() == ShiftKind::NormalizedLaplacian) return 2.0;
  return power_iteration_estimate(op) * 1.01;
}

GraphSignal impulse_response(const ShiftOperator& op,
                             const FilterKernel& kernel, int i) {
  const GraphSignal e = GraphSignal::unit_impulse(op.size(), i);
  if (kernel.kind() == KernelKind::Polynomial) {
    return apply_polynomial(op, kernel.coefficients(), e);
  }
  return apply_exact(eigendecompose(op), kernel, e);
}

GraphSignal impulse_response(const ShiftOperator& op, const ChebyshevFilter& f,
                             int i) {
  return chebyshev_apply(op, f, GraphSignal::unit_impulse(op.size(), i));
}

bool check_shift_invariance(const ShiftOperator& op, const Eigen::MatrixXd& H,
                            double tol) {
  if (H.rows() != H.cols() || H.rows() != op.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "H must be square and match the shift");
  }
  const Eigen::MatrixXd& A = op.dense();
  const double commutator = (A * H - H * A).norm();
  return commutator <= tol * A.norm() * H.norm();
}

}  // namespace gsp
