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

// Fisher information, sensitivities and signal-to-noise ratios.
//
// Every SNR is assembled as T * sqrt(M * F) from a population and its
// temperature derivative; the closed forms in the *_closed functions are kept
// only to cross-check that path. Energy measurements on a diagonal two-level
// state saturate the Cramer-Rao bound, so these SNRs are attainable.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "thermomachine/dynamics.hpp"
#include "thermomachine/numerics.hpp"
#include "thermomachine/physics.hpp"

namespace thermomachine {

/// Asymptotic ratio of the optimal two-outcome probe SNR to the sample SNR.
/// Only emitted as a labelled reference value.
inline const double kOptimalProbeAsymptote = std::sqrt(2.0 / std::numbers::pi);

/// Fisher information lambda^2 / (p0 p1) of a binary outcome.
/// Returns nullopt when p0 or p1 vanishes (the information is unbounded).
inline std::optional<double> fisher_binary(double p0, double p1, double lambda) {
  if (!(p0 >= 0.0 && p0 <= 1.0 && p1 >= 0.0 && p1 <= 1.0)) {
    throw std::domain_error("fisher_binary: populations must lie in [0, 1]");
  }
  if (p0 == 0.0 || p1 == 0.0) return std::nullopt;
  return lambda * lambda / (p0 * p1);
}

inline std::optional<double> fisher_binary(double p0, double lambda) {
  return fisher_binary(p0, 1.0 - p0, lambda);
}

/// One point of an SNR curve.
struct SnrPoint {
  double T = 0.0;
  std::int64_t M = 1;
  std::optional<std::int64_t> k;  // nullopt: steady state
  double p0 = 0.5;
  double p1 = 0.5;
  double sensitivity = 0.0;       // dp0/dT
  std::optional<double> fisher;   // nullopt: singular
  std::optional<double> snr;      // nullopt: singular

  [[nodiscard]] bool singular() const noexcept { return !snr.has_value(); }
};

inline SnrPoint make_snr_point(double T, std::int64_t M, std::optional<std::int64_t> k, double p0,
                               double p1, double sensitivity) {
  if (M < 1) throw std::domain_error("SNR: measurement count M must be >= 1");
  SnrPoint out{T, M, k, p0, p1, sensitivity, fisher_binary(p0, p1, sensitivity), std::nullopt};
  if (out.fisher) out.snr = T * std::sqrt(static_cast<double>(M) * *out.fisher);
  return out;
}

/// dp0_inf/dT = p0_inf p1_inf eps_s / T^2.
inline double sensitivity_steady(const MachineConfig& c) {
  const CollisionParams params = collision_params(c);
  return params.p0_inf * params.p1_inf * c.eps_s / (c.T * c.T);
}

/// dr/dT = (dp1^s/dT) (p0^v - p1^v).
inline double jump_rate_derivative(const MachineConfig& c) {
  const ThermalQubit sample = thermal_population(c.eps_s, c.T);
  const ThermalQubit ancilla = thermal_population(c.eps_v, c.T_v);
  return sample.variance() * c.eps_s / (c.T * c.T) * (ancilla.p0 - ancilla.p1);
}

/// dp0_k/dT where k counts completed collisions.
inline double sensitivity_transient(std::int64_t k, double p00, const MachineConfig& c) {
  if (k < 0) throw std::domain_error("sensitivity_transient: k must be >= 0");
  if (k == 0) return 0.0;
  const CollisionParams params = collision_params(c);
  const double kd = static_cast<double>(k);
  const double q = decay_factor(params.r, kd);
  return (1.0 - q) * sensitivity_steady(c) +
         kd * (params.p0_inf - p00) * jump_rate_derivative(c) * decay_factor(params.r, kd - 1.0);
}

inline SnrPoint snr_steady(const MachineConfig& c, std::int64_t M = 1) {
  const CollisionParams params = collision_params(c);
  return make_snr_point(c.T, M, std::nullopt, params.p0_inf, params.p1_inf,
                        sensitivity_steady(c));
}

/// sqrt(M) e^{-x/2} / (1 + e^{-x}) eps_s / T with x = eps_s/T - eps_v/T_v.
inline double snr_steady_closed(const MachineConfig& c, std::int64_t M = 1) {
  const double x = steady_exponent(c);
  const double shape = std::exp(-0.5 * std::abs(x)) / (1.0 + std::exp(-std::abs(x)));
  return std::sqrt(static_cast<double>(M)) * shape * c.eps_s / c.T;
}

inline SnrPoint snr_transient(std::int64_t k, double p00, const MachineConfig& c,
                              std::int64_t M = 1) {
  if (k < 0) throw std::domain_error("snr_transient: k must be >= 0");
  const CollisionParams params = collision_params(c);
  const double q = k == 0 ? 1.0 : decay_factor(params.r, static_cast<double>(k));
  const double p0 = (1.0 - q) * params.p0_inf + q * p00;
  const double p1 = (1.0 - q) * params.p1_inf + q * (1.0 - p00);
  return make_snr_point(c.T, M, k, p0, p1, sensitivity_transient(k, p00, c));
}

/// Energy measurements on a thermal qubit of gap eps at temperature T.
inline double snr_thermal(double T, double eps, std::int64_t M = 1) {
  if (!(T > 0.0) || !(eps > 0.0)) throw std::domain_error("snr_thermal: T and eps must be > 0");
  const double x = eps / T;
  return std::sqrt(static_cast<double>(M)) * std::exp(-0.5 * x) / (1.0 + std::exp(-x)) * x;
}

/// Gap maximising snr_thermal at fixed T.
inline numerics::Extremum optimal_thermal_gap(double T, std::int64_t M = 1) {
  return numerics::golden_section_maximize([&](double eps) { return snr_thermal(T, eps, M); },
                                           0.01 * T, 20.0 * T, 1e-13);
}

/// Relative error of the ancilla temperature estimate used for tuning.
struct NoisyAncillaSpec {
  double delta_Tv_rel = 0.0;  // Delta T_v / T_v
  int sign = +1;              // T_v^est = T_v (1 + sign * delta_Tv_rel)

  [[nodiscard]] double factor() const noexcept {
    return 1.0 + static_cast<double>(sign) * delta_Tv_rel;
  }
};

/// Machine whose ancilla gap was tuned with the misestimated T_v^est while the
/// bath actually sits at T_v.
inline MachineConfig noisy_config(const MachineConfig& c, const NoisyAncillaSpec& noisy) {
  if (!(noisy.delta_Tv_rel >= 0.0)) throw std::domain_error("noisy ancilla: delta must be >= 0");
  if (noisy.sign != 1 && noisy.sign != -1) throw std::domain_error("noisy ancilla: sign must be +1 or -1");
  if (!(noisy.factor() > 0.0)) throw std::domain_error("noisy ancilla: T_v^est must stay positive");
  MachineConfig out = c;
  out.eps_v = c.T_v * noisy.factor() / c.T_prior * c.eps_s;
  out.eps_p = out.eps_v - out.eps_s;
  return out;
}

inline SnrPoint snr_noisy_ancilla(const MachineConfig& c, const NoisyAncillaSpec& noisy,
                                  std::int64_t M = 1) {
  return snr_steady(noisy_config(c, noisy), M);
}

/// sqrt(M) e^{-x/2} / (1 + e^{-x}) eps_s / T with x = (eps_s/T) x_T.
inline double snr_noisy_ancilla_closed(const MachineConfig& c, const NoisyAncillaSpec& noisy,
                                       std::int64_t M = 1) {
  const double x_T = 1.0 - c.T / c.T_prior * noisy.factor();
  const double x = std::abs(c.eps_s / c.T * x_T);
  return std::sqrt(static_cast<double>(M)) * std::exp(-0.5 * x) / (1.0 + std::exp(-x)) * c.eps_s / c.T;
}

/// Temperature at which the noisy-ancilla SNR peaks (x_T = 0).
inline double noisy_peak_temperature(double T_prior, const NoisyAncillaSpec& noisy) {
  return T_prior / noisy.factor();
}

/// Optimal SNR from energy measurements on k sample qubits.
inline double snr_sample_bound(std::int64_t k, double T, double eps_s) {
  if (k < 1) throw std::domain_error("snr_sample_bound: k must be >= 1");
  return snr_thermal(T, eps_s, k);
}

/// Smallest k with snr_sample_bound(k, T, eps_s) >= target.
inline std::int64_t required_interactions(double target_snr, double T, double eps_s) {
  if (!(target_snr > 0.0)) throw std::domain_error("required_interactions: target must be > 0");
  const double per_qubit = snr_thermal(T, eps_s, 1);
  const double estimate = std::ceil((target_snr / per_qubit) * (target_snr / per_qubit));
  if (!(estimate < 9.0e18)) throw std::overflow_error("required_interactions: k exceeds int64");
  auto k = std::max<std::int64_t>(1, static_cast<std::int64_t>(estimate));
  while (k > 1 && snr_sample_bound(k - 1, T, eps_s) >= target_snr) --k;
  while (snr_sample_bound(k, T, eps_s) < target_snr) ++k;
  return k;
}

}  // namespace thermomachine
