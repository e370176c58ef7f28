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


#include <cmath>
#include <limits>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "thermomachine/estimation.hpp"
#include "thermomachine/metrology.hpp"
#include "thermomachine/numerics.hpp"
#include "thermomachine/verify.hpp"

using namespace thermomachine;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

MachineConfig tuned(double T, double T_prior, double p00 = 1.0) {
  return tune_config(1.0, T_prior, 1.0, 1.0, p00).at_temperature(T);
}

// Independent long-double evaluation of the binary-outcome SNR.
double direct_snr(double T, double p0, double lambda, std::int64_t M) {
  const long double p = p0;
  const long double l = lambda;
  return static_cast<double>(T * std::sqrt(M * l * l / (p * (1.0L - p))));
}

}  // namespace

TEST_CASE("fisher_binary values", "[metrology]") {
  CHECK(*fisher_binary(0.5, 4.0) == 64.0);
  CHECK(*fisher_binary(0.3, 0.0) == 0.0);
  CHECK_FALSE(fisher_binary(1.0, 0.0, 2.0).has_value());
  CHECK_FALSE(fisher_binary(0.0, 2.0).has_value());
  CHECK_THROWS_AS(fisher_binary(1.2, 0.1), std::domain_error);
  // Two-outcome instance of sum_j (dp_j/dT)^2 / p_j.
  const double p0 = 0.37, lambda = 1.9;
  CHECK_THAT(*fisher_binary(p0, lambda), WithinRel(lambda * lambda / p0 + lambda * lambda / (1.0 - p0), 1e-14));
}

TEST_CASE("steady sensitivity", "[metrology]") {
  CHECK_THAT(sensitivity_steady(tuned(0.25, 0.25)), WithinRel(4.0, 1e-14));
  CHECK_THAT(sensitivity_steady(tuned(0.125, 0.125)), WithinRel(0.25 / (0.125 * 0.125), 1e-14));
  // Fixed, untuned gaps: the response freezes out as T -> 0.
  const MachineConfig untuned = make_config(1.0, 4.0, 0.2, 1.0, 0.25);
  CHECK(sensitivity_steady(untuned.at_temperature(0.01)) < 1e-30);
}

TEST_CASE("steady sensitivity matches finite differences", "[metrology][property]") {
  const std::uint64_t seed = GENERATE(61u, 62u, 63u, 64u);
  for (std::uint64_t n = 0; n < 100; ++n) {
    const MachineConfig c = random_config(seed, n);
    const double h = 1e-6 * c.T;
    const double fd = numerics::central_difference(
        [&](double T) { return steady_population(c.at_temperature(T)); }, c.T, h);
    CHECK_THAT(fd, WithinRel(sensitivity_steady(c), 1e-6));
  }
}

TEST_CASE("transient sensitivity matches finite differences", "[metrology][property]") {
  const std::uint64_t seed = GENERATE(71u, 72u, 73u);
  for (std::uint64_t n = 0; n < 100; ++n) {
    const MachineConfig c = random_config(seed, n);
    for (std::int64_t k : {1, 2, 10, 300, 5000}) {
      // Difference the deviation from p00 so that p0_k ~ 1 does not swamp it.
      const double fd = numerics::central_difference(
          [&](double T) {
            const CollisionParams p = collision_params(c.at_temperature(T));
            return -std::expm1(static_cast<double>(k) * std::log1p(-p.r)) * (p.p0_inf - c.p00);
          },
          c.T, 1e-5 * c.T);
      const double exact = sensitivity_transient(k, c.p00, c);
      // Magnitude of the two terms; their sum may cancel.
      const CollisionParams p = collision_params(c);
      const double kd = static_cast<double>(k);
      const double scale =
          std::abs((1.0 - std::pow(1.0 - p.r, kd)) * sensitivity_steady(c)) +
          std::abs(kd * (p.p0_inf - c.p00) * jump_rate_derivative(c) * std::pow(1.0 - p.r, kd - 1.0));
      // Round-off floor of the central difference itself.
      const double h = 1e-5 * c.T;
      const double floor = 16.0 * std::numeric_limits<double>::epsilon() *
                           std::abs((1.0 - std::pow(1.0 - p.r, kd)) * (p.p0_inf - c.p00)) / h;
      CHECK(std::abs(fd - exact) <= 1e-5 * scale + floor);
    }
  }
}

TEST_CASE("transient sensitivity limits", "[metrology]") {
  const MachineConfig c = tuned(0.2, 0.25);
  CHECK(sensitivity_transient(0, 1.0, c) == 0.0);
  CHECK_THAT(sensitivity_transient(1'000'000, 1.0, c), WithinRel(sensitivity_steady(c), 1e-14));
  CHECK_THROWS_AS(sensitivity_transient(-1, 1.0, c), std::domain_error);
}

TEST_CASE("steady SNR reference values", "[metrology]") {
  CHECK_THAT(*snr_steady(tuned(0.25, 0.25)).snr, WithinRel(2.0, 1e-12));
  CHECK_THAT(*snr_steady(tuned(1.0 / 8.0, 1.0 / 7.0)).snr, WithinAbs(3.547, 0.01));
  CHECK_THAT(*snr_steady(tuned(1.0 / 8.0, 1.0 / 7.0)).snr, WithinAbs(3.5473, 1e-4));
  CHECK_THAT(*snr_steady(tuned(0.2, 0.25)).snr, WithinAbs(2.217047, 1e-6));
  CHECK_THAT(*snr_steady(tuned(0.25, 0.25), 9).snr, WithinRel(6.0, 1e-12));
  for (double Tp : {0.25, 0.125, 1.0 / 12.0, 1.0 / 16.0}) {
    CHECK_THAT(*snr_steady(tuned(Tp, Tp)).snr, WithinRel(0.5 / Tp, 1e-12));
  }
}

TEST_CASE("SNR equals T sqrt(M F) for every point", "[metrology][property]") {
  const std::uint64_t seed = GENERATE(81u, 82u, 83u);
  for (std::uint64_t n = 0; n < 100; ++n) {
    const MachineConfig c = random_config(seed, n);
    const std::int64_t M = 1 + static_cast<std::int64_t>(n % 17);
    const std::int64_t k = 1 + static_cast<std::int64_t>(n * 13);
    for (const SnrPoint& s : {snr_steady(c, M), snr_transient(k, c.p00, c, M)}) {
      REQUIRE_FALSE(s.singular());
      CHECK_THAT(*s.snr, WithinRel(c.T * std::sqrt(M * *fisher_binary(s.p0, s.p1, s.sensitivity)), 1e-12));
      CHECK_THAT(*s.snr, WithinRel(direct_snr(c.T, s.p0, s.sensitivity, M), 1e-12));
    }
    CHECK_THAT(*snr_steady(c, M).snr, WithinRel(snr_steady_closed(c, M), 1e-10));
  }
}

TEST_CASE("steady SNR is suppressed at both ends of the prior", "[metrology]") {
  const double Tp = 0.1;
  CHECK(*snr_steady(tuned(Tp * 1e-3, Tp)).snr < 1e-100);
  // At T = 2 T_prior the machine falls back to the thermal-qubit SNR.
  for (double prior : {0.1, 0.025}) {
    CHECK_THAT(*snr_steady(tuned(2.0 * prior, prior)).snr, WithinRel(snr_thermal(2.0 * prior, 1.0), 1e-12));
  }
  CHECK(*snr_steady(tuned(0.05, 0.025)).snr < *snr_steady(tuned(0.025, 0.025)).snr * 1e-4);
  // The 1/T prefactor pulls the maximum slightly below T_prior; it sits where
  // tanh(x/2) eps_s / (2 T) = 1 with x = eps_s/T - eps_s/T_prior.
  const auto peak = numerics::golden_section_maximize(
      [&](double T) { return snr_steady_closed(tuned(T, Tp)); }, 0.5 * Tp, 1.5 * Tp, 1e-12);
  const double stationary = numerics::bisect_increasing(
      [&](double T) { return 1.0 - std::tanh(0.5 * (1.0 / T - 1.0 / Tp)) / (2.0 * T); }, 0.5 * Tp, Tp, 1e-15);
  CHECK_THAT(peak.x, WithinRel(stationary, 1e-6));
  CHECK(peak.x < Tp);
  CHECK(peak.value > *snr_steady(tuned(Tp, Tp)).snr);
  CHECK_THAT(peak.value, WithinRel(*snr_steady(tuned(Tp, Tp)).snr, 0.03));
}

TEST_CASE("transient SNR approaches the steady value", "[metrology]") {
  const MachineConfig c = tuned(1.0 / 11.0, 0.1);
  CHECK_THAT(*snr_transient(100'000'000, 1.0, c, 2).snr, WithinRel(*snr_steady(c, 2).snr, 1e-12));
  CHECK_THAT(*snr_steady(c, 2).snr, WithinAbs(6.8978321, 1e-6));
  CHECK_THAT(*snr_transient(1'000'000, 1.0, c, 2).snr, WithinAbs(6.898, 1e-3));
  CHECK(snr_transient(0, 1.0, c).singular());
  CHECK(snr_transient(0, 0.6, c).snr == 0.0);
}

TEST_CASE("transient SNR overshoot depends on the initial probe state", "[metrology]") {
  // Probe in its ground state: the transient curve never exceeds the plateau.
  const MachineConfig ground = tuned(1.0 / 10.5, 0.1, 1.0);
  const double plateau = *snr_steady(ground).snr;
  double best = 0.0;
  for (std::int64_t k = 1; k <= 400'000; k += 7) best = std::max(best, *snr_transient(k, 1.0, ground).snr);
  CHECK(best <= plateau * (1.0 + 1e-12));

  // Maximally mixed start above the prior: an interior maximum above the plateau.
  const MachineConfig mixed = tuned(1.0 / 9.5, 0.1, 0.5);
  const double mixed_plateau = *snr_steady(mixed).snr;
  std::int64_t argmax = 0;
  double peak = 0.0;
  for (std::int64_t k = 1; k <= 200'000; ++k) {
    const double v = *snr_transient(k, 0.5, mixed).snr;
    if (v > peak) {
      peak = v;
      argmax = k;
    }
  }
  CHECK(peak > mixed_plateau * 1.004);
  CHECK(argmax > 30'000);
  CHECK(argmax < 40'000);
  CHECK(*snr_transient(200'000, 0.5, mixed).snr < peak);
}

TEST_CASE("thermal probe SNR", "[metrology]") {
  CHECK_THAT(snr_thermal(1.0 / 11.0, 1.0, 20000), WithinAbs(6.3574182, 1e-6));
  CHECK_THAT(snr_thermal(0.25, 1.0, 1), WithinAbs(0.5316045, 1e-7));
  CHECK_THAT(snr_thermal(0.5, 2.0, 16), WithinRel(4.0 * snr_thermal(1.0, 4.0), 1e-14));
  CHECK_THROWS_AS(snr_thermal(0.0, 1.0), std::domain_error);

  const numerics::Extremum best = optimal_thermal_gap(1.0, 1);
  CHECK_THAT(best.value, WithinAbs(0.66274, 1e-5));
  CHECK_THAT(best.x, WithinAbs(2.3994, 1e-4));
  // Root of the stationarity condition of x e^{-x/2} / (1 + e^{-x}).
  const double root = numerics::bisect_increasing(
      [](double x) { return -(1.0 / x - 0.5 + 1.0 / (1.0 + std::exp(x))); }, 1.0, 4.0, 1e-15);
  CHECK_THAT(root, WithinAbs(2.39935728, 1e-8));
  CHECK_THAT(best.x, WithinRel(root, 1e-6));
}

TEST_CASE("noisy ancilla", "[metrology]") {
  const MachineConfig c = tuned(0.08, 0.1);
  CHECK(*snr_noisy_ancilla(c, NoisyAncillaSpec{0.0, 1}).snr == *snr_steady(c).snr);

  const NoisyAncillaSpec plus{0.4, 1};
  const double T_peak = noisy_peak_temperature(0.1, plus);
  CHECK_THAT(T_peak, WithinRel(1.0 / 14.0, 1e-14));
  CHECK_THAT(*snr_noisy_ancilla(tuned(T_peak, 0.1), plus).snr, WithinRel(7.0, 1e-12));

  const std::uint64_t seed = GENERATE(91u, 92u);
  for (std::uint64_t n = 0; n < 50; ++n) {
    const MachineConfig r = random_config(seed, n);
    const NoisyAncillaSpec noisy{0.45 * counter_uniform(seed, n), n % 2 ? 1 : -1};
    const std::int64_t M = 1 + static_cast<std::int64_t>(n);
    const double Tp = noisy_peak_temperature(r.T_prior, noisy);
    CHECK_THAT(*snr_noisy_ancilla(r.at_temperature(Tp), noisy, M).snr,
               WithinRel(std::sqrt(double(M)) * 0.5 * noisy.factor() * r.eps_s / r.T_prior, 1e-12));
    CHECK_THAT(*snr_noisy_ancilla(r, noisy, M).snr, WithinRel(snr_noisy_ancilla_closed(r, noisy, M), 1e-10));
  }
  CHECK_THROWS_AS(snr_noisy_ancilla(c, NoisyAncillaSpec{1.0, -1}), std::domain_error);
  CHECK_THROWS_AS(snr_noisy_ancilla(c, NoisyAncillaSpec{0.1, 0}), std::domain_error);
}

TEST_CASE("sample bound and required interactions", "[metrology]") {
  for (double T : {0.1, 0.25, 1.3}) CHECK(snr_sample_bound(1, T, 1.0) == snr_thermal(T, 1.0, 1));
  CHECK_THAT(snr_sample_bound(100, 0.2, 1.0), WithinAbs(4.0767808, 1e-7));
  CHECK(required_interactions(snr_sample_bound(100, 0.2, 1.0), 0.2, 1.0) == 100);
  CHECK(required_interactions(4.0768, 0.2, 1.0) == 101);
  for (std::int64_t k0 : {1, 2, 17, 999, 123456}) {
    CHECK(required_interactions(snr_sample_bound(k0, 0.15, 1.0), 0.15, 1.0) == k0);
  }
  // For a fixed target the cost grows like e^{eps_s / T} once eps_s >> T.
  const double target = 10.0;
  const double k10 = static_cast<double>(required_interactions(target, 0.1, 1.0));
  const double k11 = static_cast<double>(required_interactions(target, 1.0 / 11.0, 1.0));
  CHECK_THAT(k11 / k10, WithinRel(std::exp(1.0) * std::pow(10.0 / 11.0, 2.0), 1e-3));
  CHECK_THROWS_AS(snr_sample_bound(0, 0.2, 1.0), std::domain_error);
}
