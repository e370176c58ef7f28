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

#include "catch_amalgamated.hpp"
#include "thermomachine/estimation.hpp"
#include "thermomachine/heat.hpp"
#include "thermomachine/verify.hpp"

using namespace thermomachine;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const MachineConfig kReference = make_config(1.0, 4.0, 0.2, 1.0, 0.25);
}

TEST_CASE("heat at the fixed point is zero", "[heat]") {
  const double p_inf = collision_params(kReference).p0_inf;
  for (std::int64_t k : {0, 1, 10, 100000}) {
    CHECK(heat_sample(k, p_inf, kReference) == 0.0);
    CHECK(heat_ancilla(k, p_inf, kReference) == 0.0);
  }
  CHECK(heat_sample(0, 1.0, kReference) == 0.0);
}

TEST_CASE("single-collision heat", "[heat]") {
  CHECK_THAT(heat_sample(1, 1.0, kReference), WithinAbs(0.017866, 1e-6));
  const double dp = collide_analytic(1.0, collision_params(kReference)) - 1.0;
  CHECK_THAT(heat_ancilla(1, 1.0, kReference), WithinRel(kReference.eps_v * dp, 1e-12));
  CHECK_THAT(heat_sample(1, 1.0, kReference), WithinRel(-kReference.eps_s * dp, 1e-12));
  CHECK_THROWS_AS(heat_sample(-1, 1.0, kReference), std::domain_error);
}

TEST_CASE("total sample heating stays below one quantum", "[heat][property]") {
  const std::uint64_t seed = GENERATE(101u, 102u, 103u);
  for (std::uint64_t n = 0; n < 200; ++n) {
    MachineConfig c = random_config(seed, n);
    for (double p00 : {0.0, c.p00, 1.0}) {
      const double q_inf = heat_sample(std::int64_t{1} << 50, p00, c);
      CHECK_THAT(q_inf, WithinAbs(c.eps_s * (p00 - collision_params(c).p0_inf), 1e-14));
      CHECK(std::abs(q_inf) <= c.eps_s);
    }
  }
  CHECK_THAT(heat_sample(std::int64_t{1} << 50, 1.0, kReference), WithinAbs(1.0 - 0.26894142, 1e-8));
}

TEST_CASE("sample and ancilla heats have opposite signs", "[heat][property]") {
  const std::uint64_t seed = GENERATE(111u, 112u);
  for (std::uint64_t n = 0; n < 300; ++n) {
    const MachineConfig c = random_config(seed, n);
    const auto k = static_cast<std::int64_t>(1 + n * 11);
    const double qs = heat_sample(k, c.p00, c);
    const double qv = heat_ancilla(k, c.p00, c);
    if (qs != 0.0 && qv != 0.0) CHECK(qs * qv < 0.0);
    CHECK_THAT(qv, WithinRel(-qs * c.eps_v / c.eps_s, 1e-13));
    CHECK(std::abs(qs + qv + probe_energy_change(k, c.p00, c)) <= 1e-13 * c.eps_v);
  }
}

TEST_CASE("mixed probe cools a sample above the prior", "[heat]") {
  const MachineConfig c = tune_config(1.0, 0.25, 1.0, 1.0, 0.5).at_temperature(1.0 / 3.5);
  REQUIRE(collision_params(c).p0_inf > 0.5);
  CHECK(heat_sample(50, 0.5, c) < 0.0);
  CHECK(heat_ancilla(50, 0.5, c) > 0.0);
}

TEST_CASE("trajectory matches the exact triad", "[heat][oracle]") {
  const MachineConfig c = tune_config(1.0, 0.25, 1.0, 1.0, 1.0).at_temperature(1.0 / 4.5);
  const HeatTrajectory tr = perturbation_trajectory(300, 1.0, c);
  const CollisionOracle oracle(c);
  double p0 = 1.0;
  for (std::size_t j = 0; j < tr.steps(); ++j) {
    const TriadState after = oracle.collide_triad(p0);
    CHECK_THAT(tr.sample_ground[j], WithinAbs(after.ground(kSample), 1e-12));
    CHECK_THAT(tr.ancilla_ground[j], WithinAbs(after.ground(kAncilla), 1e-12));
    CHECK_THAT(tr.probe_ground[j], WithinAbs(after.ground(kProbe), 1e-12));
    CHECK_THAT(tr.delta_p[j], WithinAbs(after.ground(kProbe) - p0, 1e-12));
    p0 = after.ground(kProbe);
  }
}

TEST_CASE("per-collision energy balance", "[heat][property]") {
  const std::uint64_t seed = GENERATE(121u, 122u);
  for (std::uint64_t n = 0; n < 40; ++n) {
    const MachineConfig c = random_config(seed, n);
    const HeatTrajectory tr = perturbation_trajectory(400, c.p00, c);
    double cumulative = 0.0;
    for (std::size_t j = 0; j < tr.steps(); ++j) {
      const double dp = tr.delta_p[j];
      CHECK(std::abs(c.eps_v * dp - (c.eps_s * dp + c.eps_p * dp)) <= 1e-12 * std::max(1.0, std::abs(c.eps_v * dp)));
      cumulative += dp;
      CHECK(std::abs(tr.heat_sample[j] + tr.heat_ancilla[j] + tr.probe_energy[j]) <= 1e-12);
      CHECK(std::abs(tr.heat_sample[j] + c.eps_s * cumulative) <= 1e-12);
    }
  }
}

TEST_CASE("perturbations relax to the unperturbed values", "[heat]") {
  const MachineConfig c = tune_config(1.0, 0.1, 1.0, 1.0, 0.5).at_temperature(1.0 / 9.5);
  const HeatTrajectory tr = perturbation_trajectory(400'000, 0.5, c);
  CHECK(std::abs(tr.delta_p.back()) < 1e-12);
  CHECK_THAT(tr.sample_ground.back(), WithinAbs(tr.sample_ground_thermal, 1e-12));
  CHECK_THAT(tr.ancilla_ground.back(), WithinAbs(tr.ancilla_ground_thermal, 1e-12));
  CHECK_THROWS_AS(perturbation_trajectory(0, 1.0, c), std::domain_error);
}
