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

// Heat bookkeeping for the sample and the ancilla bath.
//
// Sign convention: energy absorbed by a subsystem is positive. A collision
// that raises the probe ground population by dp takes eps_s dp from the
// sample qubit, gives eps_v dp to the ancilla, and takes eps_P dp from the
// probe. Q_P below is that probe energy change; it is neither labelled heat
// nor work, it only closes the balance Q_S + Q_v + Q_P = 0.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "thermomachine/dynamics.hpp"
#include "thermomachine/physics.hpp"

namespace thermomachine {

/// Heat absorbed by the sample after k collisions.
inline double heat_sample(std::int64_t k, double p00, const MachineConfig& c) {
  if (k < 0) throw std::domain_error("heat_sample: k must be >= 0");
  const CollisionParams params = collision_params(c);
  return c.eps_s * (p00 - params.p0_inf) * (1.0 - decay_factor(params.r, static_cast<double>(k)));
}

/// Heat absorbed by the ancilla bath after k collisions.
inline double heat_ancilla(std::int64_t k, double p00, const MachineConfig& c) {
  if (k < 0) throw std::domain_error("heat_ancilla: k must be >= 0");
  const CollisionParams params = collision_params(c);
  return c.eps_v * (params.p0_inf - p00) * (1.0 - decay_factor(params.r, static_cast<double>(k)));
}

/// Energy gained by the probe after k collisions, eps_P (p00 - p0_k).
inline double probe_energy_change(std::int64_t k, double p00, const MachineConfig& c) {
  return c.eps_p * (p00 - transient_population(k, p00, collision_params(c)));
}

/// Step-by-step record of the perturbation caused by the probe.
///
/// Index j - 1 holds collision j = 1..k_max.
struct HeatTrajectory {
  double sample_ground_thermal = 0.0;   // unperturbed p0^s
  double ancilla_ground_thermal = 0.0;  // unperturbed p0^v
  std::vector<double> delta_p;          // Delta_j p = p0_j - p0_{j-1}
  std::vector<double> probe_ground;     // p0_j after collision j
  std::vector<double> sample_ground;    // sample qubit j after its collision
  std::vector<double> ancilla_ground;   // ancilla after collision j
  std::vector<double> heat_sample;      // cumulative Q_S(j)
  std::vector<double> heat_ancilla;     // cumulative Q_v(j)
  std::vector<double> probe_energy;     // cumulative Q_P(j)

  [[nodiscard]] std::size_t steps() const noexcept { return delta_p.size(); }
};

/// Analytic trajectory; each step costs O(1).
inline HeatTrajectory perturbation_trajectory(std::int64_t k_max, double p00,
                                              const MachineConfig& c) {
  if (k_max < 1) throw std::domain_error("perturbation_trajectory: k_max must be >= 1");
  const CollisionParams params = collision_params(c);
  const ThermalQubit sample = thermal_population(c.eps_s, c.T);
  const ThermalQubit ancilla = thermal_population(c.eps_v, c.T_v);

  HeatTrajectory out;
  out.sample_ground_thermal = sample.p0;
  out.ancilla_ground_thermal = ancilla.p0;
  const auto n = static_cast<std::size_t>(k_max);
  for (auto* v : {&out.delta_p, &out.probe_ground, &out.sample_ground, &out.ancilla_ground,
                  &out.heat_sample, &out.heat_ancilla, &out.probe_energy}) {
    v->reserve(n);
  }
  double previous = p00;
  double cumulative = 0.0;
  for (std::int64_t j = 1; j <= k_max; ++j) {
    const double current = transient_population(j, p00, params);
    const double dp = params.r * (params.p0_inf - previous);
    cumulative = current - p00;
    out.delta_p.push_back(dp);
    out.probe_ground.push_back(current);
    out.sample_ground.push_back(sample.p0 + dp);
    out.ancilla_ground.push_back(ancilla.p0 - dp);
    out.heat_sample.push_back(-c.eps_s * cumulative);
    out.heat_ancilla.push_back(c.eps_v * cumulative);
    out.probe_energy.push_back(-c.eps_p * cumulative);
    previous = current;
  }
  return out;
}

}  // namespace thermomachine
