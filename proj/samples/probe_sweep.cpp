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


// Tunes a machine for a prior guess, then prints how the probe's SNR builds
// up with the number of collisions and where it settles.

#include <cstdio>

#include "thermomachine.hpp"

int main() {
  using namespace thermomachine;

  const double eps_s = 1.0;
  const MachineConfig tuned = tune_config(eps_s, /*T_prior=*/0.25, /*T_v=*/1.0);
  const MachineConfig c = tuned.at_temperature(0.2);
  const CollisionParams params = collision_params(c);

  std::printf("eps_v = %.6g, collision time = %.6g\n", c.eps_v, c.collision_time());
  std::printf("jump rate r = %.10g, steady p0 = %.10g\n", params.r, params.p0_inf);
  std::printf("%8s %14s %14s\n", "k", "p0_k", "SNR (M=1)");
  for (std::int64_t k : {1, 10, 100, 1000, 10000}) {
    const SnrPoint p = snr_transient(k, c.p00, c, 1);
    std::printf("%8lld %14.10f %14.10f\n", static_cast<long long>(k), p.p0, p.snr.value_or(0.0));
  }
  std::printf("%8s %14.10f %14.10f\n", "steady", params.p0_inf, snr_steady(c, 1).snr.value_or(0.0));
  const numerics::Extremum best = optimal_thermal_gap(c.T, 1);
  std::printf("thermal probe: best gap %.6g gives SNR %.10f\n", best.x, best.value);
  return 0;
}
