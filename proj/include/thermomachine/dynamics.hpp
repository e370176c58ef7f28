// Copyright 2026 The thermomachine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Collision dynamics of the probe.
//
// Two independent routes are provided:
//   * an exact oracle that builds the probe/sample/ancilla Hamiltonian,
//     exponentiates it by eigendecomposition, and partial-traces the result;
//   * the closed-form recurrence p0' = (1 - r) p0 + r p0_inf and its solution.
//
// Basis convention: |i_P j_s k_v> with P slowest and v fastest, i.e.
// index = (i * d_s + j) * 2 + k. For a qubit sample the two coupled states
// |0_P 0_s 1_v> and |1_P 1_s 0_v> sit at indices 1 and 6.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "thermomachine/physics.hpp"

namespace thermomachine {

using ComplexMatrix = Eigen::MatrixXcd;
using ProbeMatrix = Eigen::Matrix2cd;

/// Dimensions of the probe (2) x sample (d) x ancilla (2) product space.
struct TriadLayout {
  std::size_t sample_dim = 2;

  [[nodiscard]] std::size_t dim() const noexcept { return 4 * sample_dim; }
  [[nodiscard]] std::size_t index(std::size_t probe, std::size_t sample,
                                  std::size_t ancilla) const noexcept {
    return (probe * sample_dim + sample) * 2 + ancilla;
  }
};

inline constexpr std::size_t kLowerCoupledIndex = 1;  // |0_P 0_s 1_v>
inline constexpr std::size_t kUpperCoupledIndex = 6;  // |1_P 1_s 0_v>

/// Free and interaction parts of the triad Hamiltonian, kept apart so that the
/// commutation condition can be checked directly.
struct TriadHamiltonian {
  ComplexMatrix free;
  ComplexMatrix interaction;

  [[nodiscard]] ComplexMatrix total() const { return free + interaction; }
};

/// Generic triad: probe gap, arbitrary sample spectrum, ancilla gap, and the
/// sample pair (lower, upper) addressed by the three-body coupling.
inline TriadHamiltonian build_triad_parts(double eps_p, const std::vector<double>& sample_levels,
                                          double eps_v, double eps_I, std::size_t lower,
                                          std::size_t upper) {
  const TriadLayout layout{sample_levels.size()};
  if (layout.sample_dim < 2) {
    throw std::domain_error("build_triad_parts: sample needs at least two levels");
  }
  if (lower >= layout.sample_dim || upper >= layout.sample_dim || lower == upper) {
    throw std::domain_error("build_triad_parts: invalid coupled sample pair");
  }
  const auto n = static_cast<Eigen::Index>(layout.dim());
  TriadHamiltonian h{ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n)};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < layout.sample_dim; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        const auto a = static_cast<Eigen::Index>(layout.index(i, j, k));
        h.free(a, a) = static_cast<double>(i) * eps_p + sample_levels[j] +
                       static_cast<double>(k) * eps_v;
      }
    }
  }
  const auto a = static_cast<Eigen::Index>(layout.index(0, lower, 1));
  const auto b = static_cast<Eigen::Index>(layout.index(1, upper, 0));
  h.interaction(a, b) = eps_I;
  h.interaction(b, a) = eps_I;
  return h;
}

inline TriadHamiltonian build_triad_parts(const MachineConfig& c) {
  return build_triad_parts(c.eps_p, {0.0, c.eps_s}, c.eps_v, c.eps_I, 0, 1);
}

/// H = H_P + H_s + H_v + H_I for the qubit-sample machine.
inline ComplexMatrix build_triad_hamiltonian(const MachineConfig& c) {
  return build_triad_parts(c).total();
}

/// Frobenius norm of [a, b].
inline double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a * b - b * a).norm();
}

inline bool is_hermitian(const ComplexMatrix& h, double tol = 1e-12) {
  if (h.rows() != h.cols()) return false;
  const double scale = std::max(1.0, h.norm());
  return (h - h.adjoint()).norm() <= tol * scale;
}

/// e^{-iHt} via the eigendecomposition of the Hermitian H.
inline ComplexMatrix exact_unitary(const ComplexMatrix& h, double t) {
  if (!is_hermitian(h)) {
    throw std::domain_error("exact_unitary: Hamiltonian is not Hermitian");
  }
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("exact_unitary: eigendecomposition failed");
  }
  const Eigen::VectorXcd phases =
      (solver.eigenvalues().cast<std::complex<double>>() * std::complex<double>(0.0, -t))
          .array()
          .exp()
          .matrix();
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

/// Reduced state of one factor of the probe (0) / sample (1) / ancilla (2)
/// product space.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, const TriadLayout& layout,
                                   int keep) {
  const std::array<std::size_t, 3> dims{2, layout.sample_dim, 2};
  const auto kept = static_cast<Eigen::Index>(dims.at(static_cast<std::size_t>(keep)));
  ComplexMatrix out = ComplexMatrix::Zero(kept, kept);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < layout.sample_dim; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        const std::array<std::size_t, 3> row{i, j, k};
        for (std::size_t ip = 0; ip < 2; ++ip) {
          for (std::size_t jp = 0; jp < layout.sample_dim; ++jp) {
            for (std::size_t kp = 0; kp < 2; ++kp) {
              const std::array<std::size_t, 3> col{ip, jp, kp};
              bool traced_equal = true;
              for (int s = 0; s < 3; ++s) {
                if (s != keep && row[static_cast<std::size_t>(s)] != col[static_cast<std::size_t>(s)]) {
                  traced_equal = false;
                }
              }
              if (!traced_equal) continue;
              const auto ki = static_cast<Eigen::Index>(row[static_cast<std::size_t>(keep)]);
              const auto kj = static_cast<Eigen::Index>(col[static_cast<std::size_t>(keep)]);
              out(ki, kj) += rho(static_cast<Eigen::Index>(layout.index(i, j, k)),
                                 static_cast<Eigen::Index>(layout.index(ip, jp, kp)));
            }
          }
        }
      }
    }
  }
  return out;
}

inline constexpr int kProbe = 0;
inline constexpr int kSample = 1;
inline constexpr int kAncilla = 2;

/// Probe ground population and number of completed collisions.
struct ProbeState {
  double p0 = 1.0;
  std::int64_t k = 0;
};

/// Diagonal of a probe x sample-qubit x ancilla state.
struct TriadState {
  std::array<double, 8> populations{};

  static TriadState product(double probe_p0, const ThermalQubit& sample,
                            const ThermalQubit& ancilla) {
    const std::array<double, 2> probe{probe_p0, 1.0 - probe_p0};
    const std::array<double, 2> s{sample.p0, sample.p1};
    const std::array<double, 2> v{ancilla.p0, ancilla.p1};
    TriadState out;
    const TriadLayout layout{2};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) out.populations[layout.index(i, j, k)] = probe[i] * s[j] * v[k];
    return out;
  }

  [[nodiscard]] double total() const noexcept {
    double sum = 0.0;
    for (double p : populations) sum += p;
    return sum;
  }

  /// Ground population of factor 0 (probe), 1 (sample) or 2 (ancilla).
  [[nodiscard]] double ground(int factor) const noexcept {
    const TriadLayout layout{2};
    double sum = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) {
          const std::array<std::size_t, 3> q{i, j, k};
          if (q[static_cast<std::size_t>(factor)] == 0) sum += populations[layout.index(i, j, k)];
        }
    return sum;
  }
};

/// Brute-force collision map: conjugation of rho_P (x) rho_s (x) rho_v by the
/// exact unitary at t = pi / (2 eps_I), followed by partial traces.
///
/// The unitary and the environment state are computed once at construction,
/// after which the object is immutable and safe to share across threads.
class CollisionOracle {
 public:
  explicit CollisionOracle(const MachineConfig& c)
      : CollisionOracle(c.eps_p, {0.0, c.eps_s}, c.T, c.eps_v, c.T_v, c.eps_I, 0, 1,
                        c.collision_time()) {}

  /// Qubit machine with an arbitrary interaction time (verification only).
  CollisionOracle(const MachineConfig& c, double t)
      : CollisionOracle(c.eps_p, {0.0, c.eps_s}, c.T, c.eps_v, c.T_v, c.eps_I, 0, 1, t) {}

  /// General sample spectrum with the coupling addressing (lower, upper).
  CollisionOracle(double eps_p, const std::vector<double>& sample_levels, double T,
                  double eps_v, double T_v, double eps_I, std::size_t lower,
                  std::size_t upper, double t)
      : layout_{sample_levels.size()} {
    const TriadHamiltonian h =
        build_triad_parts(eps_p, sample_levels, eps_v, eps_I, lower, upper);
    unitary_ = exact_unitary(h.total(), t);

    // Gibbs weights relative to the ground level to avoid overflow.
    const double e0 = sample_levels.front();
    Eigen::VectorXd weights(static_cast<Eigen::Index>(layout_.sample_dim));
    for (std::size_t j = 0; j < layout_.sample_dim; ++j) {
      weights(static_cast<Eigen::Index>(j)) = std::exp(-(sample_levels[j] - e0) / T);
    }
    weights /= weights.sum();
    const ThermalQubit ancilla = thermal_population(eps_v, T_v);
    Eigen::Vector2d v(ancilla.p0, ancilla.p1);
    environment_ = Eigen::kroneckerProduct(weights, v).eval().cast<std::complex<double>>().asDiagonal();
  }

  [[nodiscard]] const ComplexMatrix& unitary() const noexcept { return unitary_; }
  [[nodiscard]] const TriadLayout& layout() const noexcept { return layout_; }

  /// Joint state after one collision starting from rho_P (x) environment.
  [[nodiscard]] ComplexMatrix evolve_joint(const ProbeMatrix& probe) const {
    const ComplexMatrix initial = Eigen::kroneckerProduct(ComplexMatrix(probe), environment_).eval();
    return unitary_ * initial * unitary_.adjoint();
  }

  [[nodiscard]] ProbeMatrix collide(const ProbeMatrix& probe) const {
    return partial_trace(evolve_joint(probe), layout_, kProbe);
  }

  [[nodiscard]] ProbeState collide(const ProbeState& probe) const {
    ProbeMatrix rho = ProbeMatrix::Zero();
    rho(0, 0) = probe.p0;
    rho(1, 1) = 1.0 - probe.p0;
    return ProbeState{collide(rho)(0, 0).real(), probe.k + 1};
  }

  /// Post-collision diagonal of the qubit triad (sample dimension 2 only).
  [[nodiscard]] TriadState collide_triad(double probe_p0) const {
    if (layout_.sample_dim != 2) {
      throw std::domain_error("collide_triad: only defined for a qubit sample");
    }
    ProbeMatrix rho = ProbeMatrix::Zero();
    rho(0, 0) = probe_p0;
    rho(1, 1) = 1.0 - probe_p0;
    const ComplexMatrix joint = evolve_joint(rho);
    TriadState out;
    for (std::size_t a = 0; a < 8; ++a) {
      out.populations[a] = joint(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)).real();
    }
    return out;
  }

 private:
  TriadLayout layout_;
  ComplexMatrix unitary_;
  ComplexMatrix environment_;
};

/// One oracle collision; builds a fresh CollisionOracle per call.
inline ProbeState collide_oracle(const ProbeState& probe, const MachineConfig& c) {
  return CollisionOracle(c).collide(probe);
}

inline double collide_analytic(double p0, const CollisionParams& params) noexcept {
  return (1.0 - params.r) * p0 + params.r * params.p0_inf;
}

/// exp(x) underflows to zero below this exponent.
inline constexpr double kDecayUnderflowExponent = -745.2;

/// (1 - r)^k evaluated as exp(k log1p(-r)).
///
/// log1p keeps full precision for tiny r, where forming 1 - r first would
/// lose the digits that matter once raised to a large k. Below the smallest
/// subnormal the factor is exactly zero and the transient equals p0_inf.
inline double decay_factor(double r, double k) noexcept {
  if (k <= 0.0) return 1.0;
  if (r >= 1.0) return 0.0;
  if (r <= 0.0) return 1.0;
  const double log_factor = k * std::log1p(-r);
  if (log_factor < kDecayUnderflowExponent) return 0.0;
  return std::exp(log_factor);
}

/// Transient ground population after k completed collisions.
inline double transient_population(std::int64_t k, double p00, const CollisionParams& params) {
  if (k < 0) throw std::domain_error("transient_population: k must be >= 0");
  if (k == 0) return p00;
  const double q = decay_factor(params.r, static_cast<double>(k));
  return (1.0 - q) * params.p0_inf + q * p00;
}

inline double steady_population(const MachineConfig& c) {
  return logistic_ground(steady_exponent(c));
}

/// Sample with an arbitrary spectrum whose pair (lower, upper) is addressed.
struct DLevelSample {
  std::vector<double> levels;  // ascending
  double temperature = 1.0;
  std::size_t lower = 0;
  std::size_t upper = 1;

  /// Normalised Gibbs populations of all levels.
  [[nodiscard]] std::vector<double> populations() const {
    if (!(temperature > 0.0)) throw std::domain_error("DLevelSample: temperature must be > 0");
    std::vector<double> p(levels.size());
    double z = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      p[i] = std::exp(-(levels[i] - levels.front()) / temperature);
      z += p[i];
    }
    for (double& x : p) x /= z;
    return p;
  }

  [[nodiscard]] double pair_gap() const { return levels.at(upper) - levels.at(lower); }
};

/// Probe and ancilla settings of a machine coupled to a d-level sample.
struct DLevelMachine {
  double eps_p = 1.0;
  double eps_v = 2.0;
  double T_v = 1.0;
  double eps_I = 1.0;
};

struct DLevelReduction {
  double weight = 1.0;            // w = p_j + p_j'
  CollisionParams pair_params;    // qubit params of the normalised pair
  double effective_rate = 0.0;    // w * r'
};

/// Reduces a d-level sample to a probabilistic collision with an effective
/// qubit of gap eps^(j') - eps^(j). The fixed point is that of the pair map;
/// w only rescales the rate.
inline DLevelReduction reduce_d_level(const DLevelSample& sample, const DLevelMachine& machine) {
  if (sample.levels.size() < 2) throw std::domain_error("reduce_d_level: need d_s >= 2");
  if (sample.lower >= sample.levels.size() || sample.upper >= sample.levels.size()) {
    throw std::domain_error("reduce_d_level: pair index out of range");
  }
  const double gap = sample.pair_gap();
  if (!(gap > 0.0)) {
    throw std::domain_error("reduce_d_level: pair must satisfy eps^(j') > eps^(j)");
  }
  const double detune = machine.eps_v - gap - machine.eps_p;
  if (std::abs(detune) > 1e-12 * std::max(1.0, machine.eps_v)) {
    throw std::domain_error("reduce_d_level: ancilla not resonant with the addressed pair");
  }
  const std::vector<double> p = sample.populations();
  const double w = p[sample.lower] + p[sample.upper];

  const double pair_p0 = p[sample.lower] / w;
  const double pair_p1 = p[sample.upper] / w;
  const ThermalQubit ancilla = thermal_population(machine.eps_v, machine.T_v);
  const double x = gap / sample.temperature - machine.eps_v / machine.T_v;
  CollisionParams pair{pair_p1 * ancilla.p0 + pair_p0 * ancilla.p1, logistic_ground(x),
                       logistic_ground(-x)};
  return DLevelReduction{w, pair, w * pair.r};
}

}  // namespace thermomachine
