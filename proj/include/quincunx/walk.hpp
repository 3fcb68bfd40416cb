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

#ifndef QUINCUNX_WALK_HPP_
#define QUINCUNX_WALK_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "quincunx/hilbert.hpp"

namespace quincunx {

// Coin basis |+>, |->; sigma_z = diag(+1, -1) in this ordering.
enum class Coin { kPlus = 0, kMinus = 1 };

inline Eigen::Matrix2cd sigma_z() {
  Eigen::Matrix2cd sz;
  sz << 1.0, 0.0, 0.0, -1.0;
  return sz;
}

// H = (1/sqrt(2)) [[1, 1], [1, -1]]; maps |+-> to (|+> +- |->)/sqrt(2).
inline Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd h;
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

// Joint-space index convention: field-major, coin-minor.
// Joint index of (field j, coin c) is 2*j + c.
inline int joint_index(int field_j, Coin c) {
  return 2 * field_j + static_cast<int>(c);
}

inline Vector coin_vector(Coin c) {
  Vector v = Vector::Zero(2);
  v(static_cast<int>(c)) = 1.0;
  return v;
}

// |field> (x) |coin> in the field-major layout.
inline Vector tensor_with_coin(const PureFieldState& field, Coin c) {
  Vector joint = Vector::Zero(2 * field.amplitudes.size());
  for (int j = 0; j < field.amplitudes.size(); ++j) {
    joint(joint_index(j, c)) = field.amplitudes(j);
  }
  return joint;
}

// Full experiment parameterization for one walk run. The lattice fixes the
// step angle theta = 2*pi/d; the space a run executes in is inferred from the
// initial field state (and may be larger than d to hold a coherent state).
struct WalkConfig {
  LatticeParams lattice;
  int steps = 1;
  double loss_g = 0.0;
  int substeps = 100;
  std::uint64_t seed = 42;
  Coin coin_init = Coin::kPlus;
  int n_traj = 10000;  // Monte Carlo random-walk mode only

  WalkConfig(LatticeParams lattice_, int steps_) : lattice(lattice_), steps(steps_) {
    if (steps < 1) throw std::domain_error("WalkConfig: steps must be >= 1");
    if (substeps < 1) throw std::domain_error("WalkConfig: substeps must be >= 1");
  }
};

// F = exp(i theta N (x) sigma_z): rotates the field by +theta on coin |+>
// and -theta on coin |->, so F(|theta_k> (x) |+->) = |theta_{k+-1}> (x) |+->
// when theta = 2*pi/d. Diagonal in the joint basis.
inline Matrix conditional_rotation(const ModeSpace& space, double theta) {
  const int n = 2 * space.dim;
  Matrix op = Matrix::Zero(n, n);
  for (int j = 0; j < space.dim; ++j) {
    op(joint_index(j, Coin::kPlus), joint_index(j, Coin::kPlus)) = std::polar(1.0, theta * j);
    op(joint_index(j, Coin::kMinus), joint_index(j, Coin::kMinus)) = std::polar(1.0, -theta * j);
  }
  return op;
}

inline Matrix conditional_rotation(const ModeSpace& space) {
  return conditional_rotation(space, 2.0 * kPi / space.dim);
}

// One walk step U = F (I (x) H): coin flip, then conditional rotation.
inline Matrix step_unitary(const ModeSpace& space, double theta) {
  const int n = 2 * space.dim;
  const Eigen::Matrix2cd h = hadamard();
  Matrix ih = Matrix::Zero(n, n);
  for (int j = 0; j < space.dim; ++j) {
    for (int c = 0; c < 2; ++c) {
      for (int cp = 0; cp < 2; ++cp) {
        ih(2 * j + c, 2 * j + cp) = h(c, cp);
      }
    }
  }
  return conditional_rotation(space, theta) * ih;
}

inline Matrix step_unitary(const ModeSpace& space) {
  return step_unitary(space, 2.0 * kPi / space.dim);
}

// Lossless walk: element m of the result is U^m (|field> (x) |coin_init>).
// Loss requires the density-matrix evolution in lindblad.hpp.
inline std::vector<Vector> run_ideal_walk(const WalkConfig& config,
                                          const PureFieldState& initial_field) {
  if (config.loss_g != 0.0) {
    throw std::invalid_argument(
        "run_ideal_walk: loss_g must be 0; use run_open_walk for lossy evolution");
  }
  const ModeSpace space(static_cast<int>(initial_field.amplitudes.size()));
  const Matrix u = step_unitary(space, config.lattice.theta_step);
  std::vector<Vector> states;
  states.reserve(config.steps + 1);
  states.push_back(tensor_with_coin(initial_field, config.coin_init));
  for (int m = 1; m <= config.steps; ++m) {
    states.push_back(u * states.back());
  }
  return states;
}

// Ensemble-averaged random-walk step: a fresh coin in a uniformly random
// basis state, Hadamard-rotated, conditionally coupled, and discarded
// reduces to rho -> (R_+ rho R_+^dag + R_- rho R_-^dag)/2 on the field,
// with R_+- = exp(+-i theta N). Completely positive and trace preserving.
struct RwStepChannel {
  Vector rotation;  // diagonal of R_+

  Matrix apply(const Matrix& rho_field) const {
    const auto& r = rotation;
    Matrix out(rho_field.rows(), rho_field.cols());
    for (int m = 0; m < rho_field.rows(); ++m) {
      for (int n = 0; n < rho_field.cols(); ++n) {
        const Complex plus = r(m) * std::conj(r(n));
        // (R+ rho R+^dag)_{mn} + (R- rho R-^dag)_{mn} = 2 Re(r_m r_n^*) rho_mn
        out(m, n) = plus.real() * rho_field(m, n);
      }
    }
    return out;
  }
};

inline RwStepChannel rw_step_channel(const ModeSpace& space, double theta) {
  Vector rot(space.dim);
  for (int j = 0; j < space.dim; ++j) rot(j) = std::polar(1.0, theta * j);
  return RwStepChannel{std::move(rot)};
}

inline RwStepChannel rw_step_channel(const ModeSpace& space) {
  return rw_step_channel(space, 2.0 * kPi / space.dim);
}

enum class RwMode { kEnsemble, kMonteCarlo };

// splitmix64; decorrelates per-trajectory streams from (seed, trajectory index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Classical random-walk baseline over the same lattice. Ensemble mode applies
// the exact averaged channel once per step; Monte Carlo mode samples a fresh
// +-theta rotation per step per trajectory and averages the projectors.
inline std::vector<Matrix> run_classical_walk(const WalkConfig& config,
                                              const PureFieldState& initial_field,
                                              RwMode mode) {
  const int dim = static_cast<int>(initial_field.amplitudes.size());
  const ModeSpace space(dim);
  const double theta = config.lattice.theta_step;
  std::vector<Matrix> states;
  states.reserve(config.steps + 1);

  if (mode == RwMode::kEnsemble) {
    const RwStepChannel channel = rw_step_channel(space, theta);
    Matrix rho = initial_field.amplitudes * initial_field.amplitudes.adjoint();
    states.push_back(rho);
    for (int m = 1; m <= config.steps; ++m) {
      rho = channel.apply(rho);
      states.push_back(rho);
    }
    return states;
  }

  if (config.n_traj < 1) {
    throw std::domain_error("run_classical_walk: monte_carlo requires n_traj >= 1");
  }
  for (int m = 0; m <= config.steps; ++m) {
    states.push_back(Matrix::Zero(dim, dim));
  }
  Vector rot_plus(dim), rot_minus(dim);
  for (int j = 0; j < dim; ++j) {
    rot_plus(j) = std::polar(1.0, theta * j);
    rot_minus(j) = std::conj(rot_plus(j));
  }
  Vector psi(dim);
  for (int t = 0; t < config.n_traj; ++t) {
    std::mt19937_64 rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
    psi = initial_field.amplitudes;
    states[0].noalias() += psi * psi.adjoint();
    for (int m = 1; m <= config.steps; ++m) {
      const bool up = (rng() & 1ULL) != 0;
      psi = psi.cwiseProduct(up ? rot_plus : rot_minus);
      states[m].noalias() += psi * psi.adjoint();
    }
  }
  for (auto& rho : states) rho /= static_cast<double>(config.n_traj);
  return states;
}

}  // namespace quincunx

#endif  // QUINCUNX_WALK_HPP_
