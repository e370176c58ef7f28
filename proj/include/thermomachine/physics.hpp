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

// Domain types and thermal populations.
//
// Units: k_B = hbar = 1. Energies and temperatures share one arbitrary unit;
// every exponent is formed as a difference of gap/temperature ratios so that
// no Gibbs factor is ever evaluated as a ratio of exponentials.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace thermomachine {

/// 1 / (1 + e^x), evaluated without overflow for either sign of x.
inline double logistic_ground(double x) noexcept {
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

/// Two-level Gibbs state. p0 and p1 are computed independently so that the
/// small one keeps full relative precision.
struct ThermalQubit {
  double gap = 0.0;
  double temperature = 1.0;
  double p0 = 0.5;
  double p1 = 0.5;

  /// p0 * p1 = dp0/d(gap/T) magnitude; used by every sensitivity.
  [[nodiscard]] double variance() const noexcept { return p0 * p1; }
};

inline ThermalQubit thermal_population(double gap, double temperature) {
  if (!(temperature > 0.0)) {
    throw std::domain_error("thermal_population: temperature must be > 0, got " +
                            std::to_string(temperature));
  }
  if (!(gap >= 0.0)) {
    throw std::domain_error("thermal_population: gap must be >= 0, got " +
                            std::to_string(gap));
  }
  const double x = gap / temperature;
  return ThermalQubit{gap, temperature, logistic_ground(-x), logistic_ground(x)};
}

/// How tune_config treats T_v < 2 T_prior (which breaks eps_P >= eps_s).
enum class TuningPolicy { lenient, strict };

/// Full parameter set of the probe / sample-qubit / ancilla triad.
///
/// Resonance eps_v == eps_p + eps_s is an invariant of every constructor in
/// this library. Aggregate initialisation bypasses it; use make_config or
/// tune_config unless a test needs a deliberately detuned triad.
struct MachineConfig {
  double eps_s = 1.0;    // sample qubit gap
  double T = 0.2;        // sample temperature (the estimand)
  double T_v = 1.0;      // ancilla bath temperature
  double T_prior = 0.25; // prior temperature, half the assumed upper bound
  double eps_v = 4.0;    // ancilla gap
  double eps_p = 3.0;    // probe gap
  double eps_I = 1.0;    // coupling strength, sets the collision time
  double p00 = 1.0;      // initial probe ground population

  /// Set when T_v < 2 T_prior: formulas stay valid but eps_P < eps_s.
  bool gap_order_warning = false;

  [[nodiscard]] double collision_time() const noexcept {
    return std::numbers::pi / (2.0 * eps_I);
  }
  [[nodiscard]] double detuning() const noexcept { return eps_v - eps_p - eps_s; }
  [[nodiscard]] double prior_upper() const noexcept { return 2.0 * T_prior; }

  /// Copy with a different sample temperature; gaps stay as tuned.
  [[nodiscard]] MachineConfig at_temperature(double temperature) const {
    MachineConfig c = *this;
    c.T = temperature;
    return c;
  }
};

namespace detail {

inline void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string("machine config: ") + name +
                            " must be finite and > 0, got " + std::to_string(value));
  }
}

inline void require_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::domain_error(std::string("machine config: ") + name +
                            " must lie in [0, 1], got " + std::to_string(value));
  }
}

}  // namespace detail

/// Builds a config from explicit gaps. eps_p is derived from resonance.
inline MachineConfig make_config(double eps_s, double eps_v, double T, double T_v,
                                 double T_prior, double eps_I = 1.0, double p00 = 1.0) {
  detail::require_positive(eps_s, "eps_s");
  detail::require_positive(eps_v, "eps_v");
  detail::require_positive(T, "T");
  detail::require_positive(T_v, "T_v");
  detail::require_positive(T_prior, "T_prior");
  detail::require_positive(eps_I, "eps_I");
  detail::require_probability(p00, "p00");
  if (!(eps_v > eps_s)) {
    throw std::domain_error("machine config: eps_v must exceed eps_s for a positive probe gap");
  }
  MachineConfig c;
  c.eps_s = eps_s;
  c.eps_v = eps_v;
  c.eps_p = eps_v - eps_s;
  c.T = T;
  c.T_v = T_v;
  c.T_prior = T_prior;
  c.eps_I = eps_I;
  c.p00 = p00;
  c.gap_order_warning = c.eps_p < c.eps_s;
  return c;
}

/// Ancilla gap tuned to the prior temperature: eps_v = (T_v / T_prior) eps_s.
///
/// With this tuning the steady probe is maximally mixed exactly at T = T_prior.
/// The sample temperature T is set to T_prior; use at_temperature() to move it.
inline MachineConfig tune_config(double eps_s, double T_prior, double T_v, double eps_I = 1.0,
                                 double p00 = 1.0,
                                 TuningPolicy policy = TuningPolicy::lenient) {
  detail::require_positive(eps_s, "eps_s");
  detail::require_positive(T_prior, "T_prior");
  detail::require_positive(T_v, "T_v");
  const bool ordered = T_v >= 2.0 * T_prior;
  if (!ordered && policy == TuningPolicy::strict) {
    throw std::domain_error("tune_config: T_v = " + std::to_string(T_v) +
                            " is below 2 T_prior = " + std::to_string(2.0 * T_prior));
  }
  if (!(T_v > T_prior)) {
    throw std::domain_error("tune_config: T_v must exceed T_prior so that eps_v > eps_s");
  }
  MachineConfig c = make_config(eps_s, (T_v / T_prior) * eps_s, T_prior, T_v, T_prior, eps_I, p00);
  c.gap_order_warning = !ordered;
  return c;
}

/// The pair (r, p0_inf) that fully determines the probe dynamics.
struct CollisionParams {
  double r = 0.0;       // jump rate, per-collision contraction toward p0_inf
  double p0_inf = 0.5;  // steady ground population
  double p1_inf = 0.5;  // 1 - p0_inf, kept separately for precision
};

/// Exponent eps_s/T - eps_v/T_v of the steady ground population.
inline double steady_exponent(const MachineConfig& c) noexcept {
  return c.eps_s / c.T - c.eps_v / c.T_v;
}

inline CollisionParams collision_params(const MachineConfig& c) {
  const ThermalQubit sample = thermal_population(c.eps_s, c.T);
  const ThermalQubit ancilla = thermal_population(c.eps_v, c.T_v);
  const double x = steady_exponent(c);
  return CollisionParams{sample.p1 * ancilla.p0 + sample.p0 * ancilla.p1, logistic_ground(x),
                         logistic_ground(-x)};
}

}  // namespace thermomachine
