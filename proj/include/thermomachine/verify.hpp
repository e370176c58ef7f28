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

// Self-test: cross-checks every closed form against the exact oracle, finite
// differences, or a step-by-step sum over randomised machine configurations.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "thermomachine/dynamics.hpp"
#include "thermomachine/estimation.hpp"
#include "thermomachine/heat.hpp"
#include "thermomachine/metrology.hpp"
#include "thermomachine/numerics.hpp"
#include "thermomachine/physics.hpp"

namespace thermomachine {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;

  [[nodiscard]] bool passed() const noexcept { return max_error <= tolerance; }
};

struct VerifyOptions {
  std::int64_t configs = 1000;
  std::int64_t max_k = 10000;
  std::uint64_t seed = kDefaultSeed;
};

/// Tuned machine with moderate Boltzmann exponents, drawn from stream seed.
inline MachineConfig random_config(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t s = split_seed(seed, index);
  auto u = [&](std::uint64_t i) { return counter_uniform(s, i); };
  const double eps_s = 0.5 + 1.5 * u(0);
  const double T_prior = eps_s * (0.08 + 0.4 * u(1));
  const double T_v = T_prior * (2.0 + 6.0 * u(2));
  const double eps_I = 0.25 + 2.0 * u(3);
  MachineConfig c = tune_config(eps_s, T_prior, T_v, eps_I, u(4));
  return c.at_temperature(T_prior * (0.3 + 1.4 * u(5)));
}

namespace detail {

inline double relative_error(double value, double reference, double floor = 0.0) {
  return std::abs(value - reference) / std::max(std::abs(reference), floor);
}

}  // namespace detail

inline CheckResult check_unitary_structure(const VerifyOptions& opt) {
  CheckResult out{"unitary_swap_structure", 0.0, 1e-10};
  for (std::int64_t n = 0; n < std::min<std::int64_t>(opt.configs, 200); ++n) {
    const MachineConfig c = random_config(opt.seed, static_cast<std::uint64_t>(n));
    const ComplexMatrix u = exact_unitary(build_triad_hamiltonian(c), c.collision_time());
    double err = (u * u.adjoint() - ComplexMatrix::Identity(8, 8)).norm();
    for (Eigen::Index a = 0; a < 8; ++a) {
      for (Eigen::Index b = 0; b < 8; ++b) {
        const bool swapped = (a == 1 && b == 6) || (a == 6 && b == 1);
        const bool kept = a == b && a != 1 && a != 6;
        const double expected = (swapped || kept) ? 1.0 : 0.0;
        err = std::max(err, std::abs(std::abs(u(a, b)) - expected));
      }
    }
    out.max_error = std::max(out.max_error, err);
  }
  return out;
}

inline CheckResult check_commutation(const VerifyOptions& opt) {
  CheckResult out{"commutation_iff_resonant", 0.0, 1e-12};
  for (std::int64_t n = 0; n < std::min<std::int64_t>(opt.configs, 200); ++n) {
    MachineConfig c = random_config(opt.seed, static_cast<std::uint64_t>(n));
    const TriadHamiltonian resonant = build_triad_parts(c);
    const double scale = c.eps_I * c.eps_v;
    out.max_error = std::max(out.max_error, commutator_norm(resonant.interaction, resonant.free) / scale);
    const double delta = 0.1 * c.eps_s * (1.0 + static_cast<double>(n % 7));
    c.eps_v += delta;
    const TriadHamiltonian detuned = build_triad_parts(c);
    const double expected = std::sqrt(2.0) * c.eps_I * delta;
    out.max_error = std::max(
        out.max_error, detail::relative_error(commutator_norm(detuned.interaction, detuned.free), expected));
  }
  return out;
}

inline CheckResult check_oracle_equivalence(const VerifyOptions& opt) {
  CheckResult out{"oracle_equivalence", 0.0, 1e-10};
  for (std::int64_t n = 0; n < opt.configs; ++n) {
    const MachineConfig c = random_config(opt.seed, static_cast<std::uint64_t>(n));
    const CollisionOracle oracle(c);
    const double p0 = counter_uniform(split_seed(opt.seed, static_cast<std::uint64_t>(n)), 99);
    const double exact = oracle.collide(ProbeState{p0, 0}).p0;
    out.max_error = std::max(out.max_error, std::abs(exact - collide_analytic(p0, collision_params(c))));
  }
  return out;
}

/// Diagonal inputs stay diagonal; probe coherences never grow.
inline CheckResult check_coherence_map(const VerifyOptions& opt) {
  CheckResult out{"diagonal_preserved_and_coherence_contracted", 0.0, 1e-12};
  for (std::int64_t n = 0; n < std::min<std::int64_t>(opt.configs, 100); ++n) {
    const MachineConfig c = random_config(opt.seed, static_cast<std::uint64_t>(n));
    const CollisionOracle oracle(c);
    const double p0 = c.p00;
    ProbeMatrix diag = ProbeMatrix::Zero();
    diag(0, 0) = p0;
    diag(1, 1) = 1.0 - p0;
    out.max_error = std::max(out.max_error, std::abs(oracle.collide(diag)(0, 1)));
    for (int m = 0; m < 8; ++m) {
      const double phi = 2.0 * std::numbers::pi * m / 8.0;
      ProbeMatrix equator;
      equator << 0.5, 0.5 * std::polar(1.0, -phi), 0.5 * std::polar(1.0, phi), 0.5;
      const ProbeMatrix after = oracle.collide(equator);
      out.max_error = std::max(out.max_error, std::abs(after(0, 1)) - std::abs(equator(0, 1)));
    }
  }
  return out;
}

inline CheckResult check_closed_form_iteration(const VerifyOptions& opt) {
  CheckResult out{"transient_closed_form_vs_iteration", 0.0, 1e-12};
  for (std::int64_t n = 0; n < std::min<std::int64_t>(opt.configs, 50); ++n) {
    const MachineConfig c = random_config(opt.seed, static_cast<std::uint64_t>(n));
    const CollisionParams params = collision_params(c);
    double p = c.p00;
    for (std::int64_t k = 1; k <= opt.max_k; ++k) {
      p = collide_analytic(p, params);
      out.max_error = std::max(out.max_error, std::abs(p - transient_population(k, c.p00, params)));
    }
  }
  return out;
}

inline CheckResult check_steady_sensitivity(const VerifyOptions& opt) {
  CheckResult out{"steady_sensitivity_finite_difference", 0.0, 1e-6};
  for (std::int64_t n = 0; n < std::min<std::int64_t>(opt.configs, 200); ++n) {
    const MachineConfig c = random_config(opt.seed, static_cast<std::uint64_t>(n));
    const double fd = numerics::central_difference(
        [&](double T) { return steady_population(c.at_temperature(T)); }, c.T, 1e-6 * c.T);
    out.max_error = std::max(out.max_error, detail::relative_error(fd, sensitivity_steady(c)));
  }
  return out;
}

inline CheckResult check_transient_sensitivity(const VerifyOptions& opt) {
  CheckResult out{"transient_sensitivity_finite_difference", 0.0, 1e-5};
  for (std::int64_t n = 0; n < std::min<std::int64_t>(opt.configs, 200); ++n) {
    const MachineConfig c = random_config(opt.seed, static_cast<std::uint64_t>(n));
    const CollisionParams params = collision_params(c);
    for (std::int64_t k : {1LL, 3LL, 17LL, 250LL, 4000LL}) {
      const double fd = numerics::central_difference(
          [&](double T) {
            const CollisionParams at = collision_params(c.at_temperature(T));
            return -std::expm1(static_cast<double>(k) * std::log1p(-at.r)) * (at.p0_inf - c.p00);
          },
          c.T, 1e-5 * c.T);
      // Relative to the magnitude of the two contributions, so that points
      // where they cancel do not register as relative blow-ups.
      const auto kd = static_cast<double>(k);
      const double scale = std::abs((1.0 - decay_factor(params.r, kd)) * sensitivity_steady(c)) +
                           std::abs(kd * (params.p0_inf - c.p00) * jump_rate_derivative(c) *
                                    decay_factor(params.r, kd - 1.0));
      out.max_error = std::max(out.max_error, std::abs(fd - sensitivity_transient(k, c.p00, c)) / scale);
    }
  }
  return out;
}

inline CheckResult check_snr_fisher(const VerifyOptions& opt) {
  CheckResult out{"snr_equals_T_sqrt_MF", 0.0, 1e-12};
  for (std::int64_t n = 0; n < std::min<std::int64_t>(opt.configs, 200); ++n) {
    const MachineConfig c = random_config(opt.seed, static_cast<std::uint64_t>(n));
    const std::int64_t M = 1 + n % 50;
    for (const SnrPoint& s : {snr_steady(c, M), snr_transient(1 + n * 37, c.p00, c, M)}) {
      if (s.singular()) continue;
      const double from_fisher =
          c.T * std::sqrt(static_cast<double>(M) * *fisher_binary(s.p0, s.p1, s.sensitivity));
      out.max_error = std::max(out.max_error, detail::relative_error(*s.snr, from_fisher));
    }
  }
  return out;
}

inline CheckResult check_snr_closed_forms(const VerifyOptions& opt) {
  CheckResult out{"snr_closed_forms", 0.0, 1e-10};
  for (std::int64_t n = 0; n < std::min<std::int64_t>(opt.configs, 200); ++n) {
    const MachineConfig c = random_config(opt.seed, static_cast<std::uint64_t>(n));
    const std::int64_t M = 1 + n % 50;
    out.max_error = std::max(out.max_error, detail::relative_error(*snr_steady(c, M).snr, snr_steady_closed(c, M)));
    const NoisyAncillaSpec noisy{0.3 * counter_uniform(opt.seed, static_cast<std::uint64_t>(n)), n % 2 ? 1 : -1};
    out.max_error = std::max(out.max_error, detail::relative_error(*snr_noisy_ancilla(c, noisy, M).snr,
                                                                   snr_noisy_ancilla_closed(c, noisy, M)));
  }
  return out;
}

inline CheckResult check_heat_balance(const VerifyOptions& opt) {
  CheckResult out{"heat_conservation_and_telescoping", 0.0, 1e-12};
  for (std::int64_t n = 0; n < std::min<std::int64_t>(opt.configs, 50); ++n) {
    const MachineConfig c = random_config(opt.seed, static_cast<std::uint64_t>(n));
    const HeatTrajectory tr = perturbation_trajectory(500, c.p00, c);
    double sum = 0.0;
    for (std::size_t j = 0; j < tr.steps(); ++j) {
      sum += tr.delta_p[j];
      const auto k = static_cast<std::int64_t>(j + 1);
      const double balance = tr.heat_sample[j] + tr.heat_ancilla[j] + tr.probe_energy[j];
      out.max_error = std::max({out.max_error, std::abs(balance) / c.eps_v,
                                std::abs(-c.eps_s * sum - heat_sample(k, c.p00, c)) / c.eps_s,
                                std::abs(c.eps_v * sum - heat_ancilla(k, c.p00, c)) / c.eps_v});
    }
  }
  return out;
}

inline CheckResult check_d_level(const VerifyOptions&) {
  CheckResult out{"d_level_reduction", 0.0, 1e-10};
  const DLevelSample sample{{0.0, 1.0, 2.0}, 0.6, 0, 1};
  const DLevelMachine machine{1.5, 2.5, 2.0, 1.0};
  const DLevelReduction red = reduce_d_level(sample, machine);
  const CollisionOracle oracle(machine.eps_p, sample.levels, sample.temperature, machine.eps_v,
                               machine.T_v, machine.eps_I, sample.lower, sample.upper,
                               std::numbers::pi / (2.0 * machine.eps_I));
  for (double p0 : {0.0, 0.3, 1.0}) {
    const double exact = oracle.collide(ProbeState{p0, 0}).p0;
    const double reduced = (1.0 - red.effective_rate) * p0 + red.effective_rate * red.pair_params.p0_inf;
    out.max_error = std::max(out.max_error, std::abs(exact - reduced));
  }
  ProbeState state{1.0, 0};
  for (int i = 0; i < 5000; ++i) {
    const ProbeState next = oracle.collide(state);
    const bool settled = std::abs(next.p0 - state.p0) < 1e-16;
    state = next;
    if (settled) break;
  }
  out.max_error = std::max(out.max_error, std::abs(state.p0 - red.pair_params.p0_inf));
  return out;
}

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt = {}) {
  return {check_unitary_structure(opt),   check_commutation(opt),
          check_oracle_equivalence(opt),  check_coherence_map(opt),
          check_closed_form_iteration(opt), check_steady_sensitivity(opt),
          check_transient_sensitivity(opt), check_snr_fisher(opt),
          check_snr_closed_forms(opt),    check_heat_balance(opt),
          check_d_level(opt)};
}

}  // namespace thermomachine
