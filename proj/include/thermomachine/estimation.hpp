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

// Monte Carlo measurement records and maximum-likelihood temperature estimates.
//
// Random numbers come from a counter-based generator: the u-th uniform of a
// stream is a pure function of (seed, counter), built on the SplitMix64
// finalizer. Per-trial seeds are derived with split_seed(master, trial), so
// trials can run in any order or in parallel and still reproduce bit for bit.
// Binomial counts are drawn by inverting the CDF with a single uniform.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "thermomachine/dynamics.hpp"
#include "thermomachine/metrology.hpp"
#include "thermomachine/numerics.hpp"
#include "thermomachine/physics.hpp"

namespace thermomachine {

inline constexpr std::uint64_t kDefaultSeed = 0x7E3A0C0FFEE5EEDULL;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of the index-th independent substream of master.
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return mix64(master ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

/// Uniform in the open interval (0, 1): counter-th draw of stream seed.
constexpr double counter_uniform(std::uint64_t seed, std::uint64_t counter) noexcept {
  const std::uint64_t bits = mix64(seed ^ mix64(counter)) >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

/// Smallest m with P[Binomial(n, p) <= m] >= u.
///
/// Starts at the mode and walks outward using the pmf ratio recurrence, so
/// the cost is O(sqrt(n p (1 - p))) per draw.
inline std::int64_t binomial_inverse(std::int64_t n, double p, double u) {
  if (n < 0) throw std::domain_error("binomial_inverse: n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial_inverse: p must lie in [0, 1]");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  const double q = 1.0 - p;
  const double nd = static_cast<double>(n);
  const auto mode = std::min<std::int64_t>(n, static_cast<std::int64_t>(std::floor((nd + 1.0) * p)));
  const double md = static_cast<double>(mode);
  const double pmf_mode = std::exp(std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) -
                                   std::lgamma(nd - md + 1.0) + md * std::log(p) +
                                   (nd - md) * std::log1p(-p));
  const double down_ratio = q / p;
  const double up_ratio = p / q;

  double below = 0.0;
  double term = pmf_mode;
  for (std::int64_t m = mode; m > 0; --m) {
    term *= static_cast<double>(m) / static_cast<double>(n - m + 1) * down_ratio;
    below += term;
    if (term <= 1e-20 * below || term == 0.0) break;
  }

  double cdf = below + pmf_mode;
  term = pmf_mode;
  std::int64_t m = mode;
  if (u <= cdf) {
    while (m > 0) {
      const double previous = cdf - term;
      if (u > previous) break;
      cdf = previous;
      term *= static_cast<double>(m) / static_cast<double>(n - m + 1) * down_ratio;
      --m;
      if (term == 0.0) break;
    }
    return m;
  }
  while (m < n && cdf < u) {
    term *= static_cast<double>(n - m) / static_cast<double>(m + 1) * up_ratio;
    ++m;
    cdf += term;
    if (term == 0.0) break;
  }
  return m;
}

/// Outcome counts of M energy measurements on the probe.
struct MeasurementRecord {
  std::int64_t m0 = 0;  // ground outcomes
  std::int64_t M = 1;
  std::uint64_t seed = kDefaultSeed;

  [[nodiscard]] double ground_frequency() const noexcept {
    return static_cast<double>(m0) / static_cast<double>(M);
  }
};

inline MeasurementRecord sample_measurements(double p0, std::int64_t M, std::uint64_t seed) {
  if (M < 1) throw std::domain_error("sample_measurements: M must be >= 1");
  return MeasurementRecord{binomial_inverse(M, p0, counter_uniform(seed, 0)), M, seed};
}

/// Prior knowledge T in (lo, hi).
struct PriorInterval {
  double lo = 0.0;
  double hi = 1.0;

  static PriorInterval from_config(const MachineConfig& c) { return {0.0, c.prior_upper()}; }
};

/// Which probe population the measurements are drawn from.
struct ProbeModel {
  std::optional<std::int64_t> k;  // nullopt: steady state
  double p00 = 1.0;

  static ProbeModel steady() { return {}; }
  static ProbeModel transient(std::int64_t k, double p00) { return {k, p00}; }

  [[nodiscard]] bool is_steady() const noexcept { return !k.has_value(); }

  /// Ground population of the probe when the sample sits at T.
  [[nodiscard]] double population(const MachineConfig& c, double T) const {
    const MachineConfig at = c.at_temperature(T);
    if (is_steady()) return steady_population(at);
    return transient_population(*k, p00, collision_params(at));
  }
};

struct MlEstimate {
  double T_hat = 0.0;
  bool clamped = false;
};

/// Inverts an increasing model p0(T) = m0/M by bisection on the prior.
///
/// Frequencies outside the model's range on the interval clamp to the
/// endpoint on the side of the residual.
template <numerics::ScalarFunction Model>
MlEstimate ml_estimate_monotone(const MeasurementRecord& record, Model&& model,
                                const PriorInterval& prior, double x_tol) {
  const double f = record.ground_frequency();
  const double lo_eval = prior.lo > 0.0 ? prior.lo : prior.hi * 1e-9;
  if (f <= model(lo_eval)) return {prior.lo, true};
  if (f >= model(prior.hi)) return {prior.hi, true};
  const double t = numerics::bisect_increasing([&](double T) { return model(T) - f; }, lo_eval,
                                               prior.hi, x_tol);
  return {t, false};
}

inline constexpr int kLikelihoodGridPoints = 1024;

/// Maximises m0 log p0(T) + (M - m0) log p1(T) over the prior by a dense grid
/// followed by golden-section refinement around the best grid cell.
template <numerics::ScalarFunction Model>
MlEstimate ml_estimate_likelihood(const MeasurementRecord& record, Model&& model,
                                  const PriorInterval& prior) {
  const double m0 = static_cast<double>(record.m0);
  const double m1 = static_cast<double>(record.M - record.m0);
  auto log_likelihood = [&](double T) {
    const double p0 = std::clamp(static_cast<double>(model(T)), 0.0, 1.0);
    const double a = m0 > 0.0 ? m0 * std::log(p0) : 0.0;
    const double b = m1 > 0.0 ? m1 * std::log1p(-p0) : 0.0;
    const double ll = a + b;
    return std::isnan(ll) ? -std::numeric_limits<double>::infinity() : ll;
  };
  const double step = (prior.hi - prior.lo) / kLikelihoodGridPoints;
  auto center = [&](int i) { return prior.lo + (i + 0.5) * step; };
  int best = 0;
  double best_ll = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kLikelihoodGridPoints; ++i) {
    const double ll = log_likelihood(center(i));
    if (ll > best_ll) {
      best_ll = ll;
      best = i;
    }
  }
  const double a = best == 0 ? prior.lo : center(best - 1);
  const double b = best == kLikelihoodGridPoints - 1 ? prior.hi : center(best + 1);
  const auto refined = numerics::golden_section_maximize(log_likelihood, a, b, 1e-13);
  const double edge_tol = 1e-9 * (prior.hi - prior.lo);
  if (refined.x - prior.lo <= edge_tol) return {prior.lo, true};
  if (prior.hi - refined.x <= edge_tol) return {prior.hi, true};
  return {refined.x, false};
}

/// Steady model: monotone inversion to 1e-12 T_prior. Transient model:
/// likelihood maximisation (the transient population need not be monotone).
inline MlEstimate ml_estimate(const MeasurementRecord& record, const MachineConfig& c,
                              const ProbeModel& model, const PriorInterval& prior) {
  auto p0_of_T = [&](double T) { return model.population(c, T); };
  if (model.is_steady()) {
    return ml_estimate_monotone(record, p0_of_T, prior, 1e-12 * c.T_prior);
  }
  return ml_estimate_likelihood(record, p0_of_T, prior);
}

/// Below this many measurements per estimate the estimator is far from its
/// asymptotic regime and the report carries a warning.
inline constexpr std::int64_t kSmallMeasurementCount = 1000;

struct EstimationReport {
  double T_true = 0.0;
  double T_hat_mean = 0.0;
  double T_hat_std = 0.0;   // sample standard deviation
  double rmse = 0.0;
  std::optional<double> empirical_snr;  // T_true / T_hat_std; nullopt if std == 0
  std::optional<double> crb_snr;        // nullopt if the probe state is pure
  std::int64_t trials = 0;
  std::int64_t M = 0;
  double clamped_fraction = 0.0;
  bool small_M_warning = false;
  bool singular = false;
  std::uint64_t seed = kDefaultSeed;
};

/// Runs `trials` independent simulate-then-estimate rounds at the config's T.
///
/// Trials may run on several threads; each writes only its own slot and the
/// aggregation is done afterwards in trial order, so the report does not
/// depend on scheduling.
inline EstimationReport empirical_snr_study(const MachineConfig& c, const ProbeModel& model,
                                            std::int64_t M, std::int64_t trials,
                                            std::uint64_t seed = kDefaultSeed,
                                            unsigned threads = 0) {
  if (trials < 100) throw std::domain_error("empirical_snr_study: trials must be >= 100");
  if (M < 1) throw std::domain_error("empirical_snr_study: M must be >= 1");
  const PriorInterval prior = PriorInterval::from_config(c);
  const double p0_true = model.population(c, c.T);
  const SnrPoint crb = model.is_steady() ? snr_steady(c, M) : snr_transient(*model.k, model.p00, c, M);

  std::vector<MlEstimate> estimates(static_cast<std::size_t>(trials));
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      const MeasurementRecord record = sample_measurements(p0_true, M, split_seed(seed, t));
      estimates[t] = ml_estimate(record, c, model, prior);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, trials));
  {
    std::vector<std::jthread> pool;
    const std::size_t n = estimates.size();
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back(run_range, n * w / threads, n * (w + 1) / threads);
    }
  }

  EstimationReport report;
  report.T_true = c.T;
  report.trials = trials;
  report.M = M;
  report.seed = seed;
  report.crb_snr = crb.snr;
  report.singular = crb.singular();
  report.small_M_warning = M < kSmallMeasurementCount;
  double sum = 0.0;
  double sq_err = 0.0;
  std::int64_t clamped = 0;
  for (const MlEstimate& e : estimates) {
    sum += e.T_hat;
    sq_err += (e.T_hat - c.T) * (e.T_hat - c.T);
    clamped += e.clamped ? 1 : 0;
  }
  const double n = static_cast<double>(trials);
  report.T_hat_mean = sum / n;
  double var = 0.0;
  for (const MlEstimate& e : estimates) var += (e.T_hat - report.T_hat_mean) * (e.T_hat - report.T_hat_mean);
  report.T_hat_std = std::sqrt(var / (n - 1.0));
  report.rmse = std::sqrt(sq_err / n);
  report.clamped_fraction = static_cast<double>(clamped) / n;
  if (report.T_hat_std > 0.0) report.empirical_snr = c.T / report.T_hat_std;
  return report;
}

}  // namespace thermomachine
