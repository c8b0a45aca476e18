// Copyright 2026 The htdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HTDP_SRS_BINARY_H_
#define HTDP_SRS_BINARY_H_

#include "absl/status/statusor.h"
#include "htdp/estimator.h"

namespace htdp {

// Simple random sampling of n out of N units on binary data whose total lies
// in [total_min, total_max]. Everything here depends on x only through t(x).
struct SrsBinaryConfig {
  int population_size = 0;
  int sample_size = 0;
  int total_min = 0;
  int total_max = 0;
};

// Errors: InvalidConfig (needs 0 <= mt < Mt <= N and 0 < n <= N).
absl::Status ValidateSrsBinaryConfig(const SrsBinaryConfig& cfg);

// Law of the HT total given t(x) = t: atoms (N/n) y for y in
// [max(0, n + t - N), min(t, n)] with hypergeometric masses from log-gamma
// binomials, renormalized. Errors: InvalidConfig, TotalOutOfRange.
absl::StatusOr<AtomicDistribution> HypergeomAtoms(const SrsBinaryConfig& cfg,
                                                  int total);

// delta(eps) without noise: max over adjacent totals (t, t+1) in both
// orientations of sum_y (h_t(y) - e^eps h_t'(y))_+. O(N^2).
absl::StatusOr<double> DeltaSrsNoiseless(const SrsBinaryConfig& cfg,
                                         double eps, int jobs = 1);

// delta(eps) with Laplace noise of scale b > 0, computed on the
// hypergeometric atoms of every adjacent total pair.
absl::StatusOr<double> DeltaSrsLaplace(const SrsBinaryConfig& cfg,
                                       double scale, double eps, int jobs = 1);

// Closed-form epsilon at delta = 0 without noise: +inf when
// min(mt, N - Mt) < n, else ln max{(N-Mt+1)/(N-Mt+1-n), (mt+1)/(mt+1-n)}.
absl::StatusOr<double> EpsilonSrsNoiselessAtDeltaZero(
    const SrsBinaryConfig& cfg);

// inf{eps : DeltaSrsNoiseless(eps) <= delta_target} by bisection on
// [0, eps_hi]; +inf if not reached. Errors: InvalidDelta.
absl::StatusOr<double> EpsilonSrsNoiseless(const SrsBinaryConfig& cfg,
                                           double delta_target,
                                           double eps_hi = 50.0);

}  // namespace htdp

#endif  // HTDP_SRS_BINARY_H_
