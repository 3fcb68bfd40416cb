/* Copyright 2026 The quincunx Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef QUINCUNX_HILBERT_HPP_
#define QUINCUNX_HILBERT_HPP_

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace quincunx {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// Dense operators only; dimensions above this are refused outright.
inline constexpr int kMaxDim = 64;

// Truncated oscillator space H_dim = span{|0>,...,|dim-1>} with cached
// number and quadrature operators, x = (a+a^dag)/sqrt(2), p = (a-a^dag)/(sqrt(2) i).
struct ModeSpace {
  int dim = 0;
  Matrix lowering;    // a, with a|j> = sqrt(j)|j-1>
  Matrix number_op;   // diag(0,1,...,dim-1)
  Matrix x_op;
  Matrix p_op;

  explicit ModeSpace(int dimension) : dim(dimension) {
    if (dim < 1 || dim > kMaxDim) {
      throw std::domain_error("ModeSpace: dimension must be in [1, " +
                              std::to_string(kMaxDim) + "], got " +
                              std::to_string(dim));
    }
    lowering = Matrix::Zero(dim, dim);
    for (int j = 1; j < dim; ++j) {
      lowering(j - 1, j) = std::sqrt(static_cast<double>(j));
    }
    number_op = Matrix::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) number_op(j, j) = static_cast<double>(j);
    const Matrix raising = lowering.adjoint();
    x_op = (lowering + raising) / std::sqrt(2.0);
    p_op = (lowering - raising) / (std::sqrt(2.0) * kI);
  }
};

// Unit-norm field state. norm_deficit carries the weight lost to truncation
// (zero for states constructed inside the space).
struct PureFieldState {
  Vector amplitudes;
  double norm_deficit = 0.0;
};

// Coherent amplitude alpha on a d-site circular lattice; theta_step = 2*pi/d.
struct LatticeParams {
  double alpha = 0.0;
  int d = 0;
  double n_bar = 0.0;
  double theta_step = 0.0;

  LatticeParams(double alpha_, int d_)
      : alpha(alpha_), d(d_), n_bar(alpha_ * alpha_), theta_step(2.0 * kPi / d_) {
    if (d < 1) throw std::domain_error("LatticeParams: d must be positive");
    if (alpha < 0.0) throw std::domain_error("LatticeParams: alpha must be >= 0");
  }
};

// |theta_k> = (1/sqrt(d)) sum_j exp(i j theta_k) |j>, theta_k = 2*pi*k/d.
// The d phase states form an orthonormal basis of H_d.
inline PureFieldState phase_state(const ModeSpace& space, int k) {
  if (k < 0 || k >= space.dim) {
    throw std::domain_error("phase_state: k must satisfy 0 <= k < d, got k=" +
                            std::to_string(k) + " for d=" + std::to_string(space.dim));
  }
  const double theta = 2.0 * kPi * k / space.dim;
  Vector amps(space.dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(space.dim));
  for (int j = 0; j < space.dim; ++j) {
    amps(j) = std::polar(scale, theta * j);
  }
  return PureFieldState{std::move(amps), 0.0};
}

// Projection of |alpha> onto H_d, renormalized to unit norm. Poisson weights
// are accumulated in log space so that n_bar up to ~30 cannot overflow.
inline PureFieldState coherent_state_truncated(const ModeSpace& space, double alpha) {
  if (alpha < 0.0) throw std::domain_error("coherent_state_truncated: alpha must be >= 0");
  Vector amps = Vector::Zero(space.dim);
  if (alpha == 0.0) {
    amps(0) = 1.0;
    return PureFieldState{std::move(amps), 0.0};
  }
  const double log_alpha = std::log(alpha);
  double log_factorial = 0.0;
  double weight_sum = 0.0;
  std::vector<double> log_weights(space.dim);
  for (int j = 0; j < space.dim; ++j) {
    if (j > 0) log_factorial += std::log(static_cast<double>(j));
    // log of |<j|alpha>|^2 = -alpha^2 + 2 j log(alpha) - log(j!)
    log_weights[j] = -alpha * alpha + 2.0 * j * log_alpha - log_factorial;
    weight_sum += std::exp(log_weights[j]);
  }
  const double deficit = 1.0 - weight_sum;
  for (int j = 0; j < space.dim; ++j) {
    amps(j) = std::sqrt(std::exp(log_weights[j]) / weight_sum);
  }
  return PureFieldState{std::move(amps), std::max(deficit, 0.0)};
}

// exp(i angle N), diagonal with entries exp(i angle j). Rotates phase states:
// rotation_operator(2*pi*l/d) |theta_k> = |theta_{k+l}>.
inline Matrix rotation_operator(const ModeSpace& space, double angle) {
  Matrix op = Matrix::Zero(space.dim, space.dim);
  for (int j = 0; j < space.dim; ++j) {
    op(j, j) = std::polar(1.0, angle * j);
  }
  return op;
}

// exp(beta a^dag - beta* a) on the truncated space, computed by
// diagonalizing the Hermitian generator -i(beta a^dag - beta* a).
// unitarity_defect reports max_j | ||D e_j|| - 1 |; the construction is
// unitary up to eigensolver roundoff, so the defect is verified, not assumed.
struct DisplacementOperator {
  Matrix op;
  double unitarity_defect = 0.0;
};

inline DisplacementOperator displacement_operator(const ModeSpace& space, Complex beta) {
  const Matrix raising = space.lowering.adjoint();
  const Matrix generator = beta * raising - std::conj(beta) * space.lowering;
  const Matrix herm = -kI * generator;  // Hermitian since generator is anti-Hermitian
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("displacement_operator: eigendecomposition failed");
  }
  Vector phases(space.dim);
  for (int j = 0; j < space.dim; ++j) {
    phases(j) = std::polar(1.0, solver.eigenvalues()(j));
  }
  Matrix op = solver.eigenvectors() * phases.asDiagonal() *
              solver.eigenvectors().adjoint();
  double defect = 0.0;
  for (int j = 0; j < space.dim; ++j) {
    defect = std::max(defect, std::abs(op.col(j).norm() - 1.0));
  }
  return DisplacementOperator{std::move(op), defect};
}

// One evaluated inequality of the lattice-validity report.
struct LatticeCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct LatticeReport {
  std::vector<LatticeCheck> checks;
  bool pass = false;

  std::string summary() const {
    std::ostringstream out;
    for (const auto& c : checks) {
      out << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name << "  (" << c.lhs
          << " vs " << c.rhs << ")\n";
    }
    out << (pass ? "lattice valid" : "lattice INVALID");
    return out.str();
  }
};

// Checks the three coherent-lattice conditions:
//   d > n_bar + sqrt(n_bar)   (coherent state fits inside H_d)
//   d < 2*pi*sqrt(n_bar)      (adjacent lattice sites distinguishable)
//   n_bar < 28                (window where both can hold at once)
inline LatticeReport validate_lattice(const LatticeParams& params) {
  LatticeReport report;
  const double support_bound = params.n_bar + std::sqrt(params.n_bar);
  const double spacing_bound = 2.0 * kPi * std::sqrt(params.n_bar);
  report.checks.push_back(
      {"d > n_bar + sqrt(n_bar)", static_cast<double>(params.d), support_bound,
       params.d > support_bound});
  report.checks.push_back(
      {"d < 2*pi*sqrt(n_bar)", static_cast<double>(params.d), spacing_bound,
       params.d < spacing_bound});
  report.checks.push_back({"n_bar < 28", params.n_bar, 28.0, params.n_bar < 28.0});
  report.pass = report.checks[0].pass && report.checks[1].pass && report.checks[2].pass;
  return report;
}

// <theta_j | alpha>_d for j = 0..d-1, using the renormalized truncated
// coherent state. Since the phase states span H_d, the squared moduli sum to 1.
inline Vector overlap_profile(const ModeSpace& space, double alpha) {
  const PureFieldState coh = coherent_state_truncated(space, alpha);
  Vector overlaps(space.dim);
  for (int k = 0; k < space.dim; ++k) {
    const PureFieldState theta_k = phase_state(space, k);
    overlaps(k) = theta_k.amplitudes.dot(coh.amplitudes);  // dot() conjugates lhs
  }
  return overlaps;
}

}  // namespace quincunx

#endif  // QUINCUNX_HILBERT_HPP_
