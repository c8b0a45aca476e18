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

#ifndef HTDP_CALIBRATE_H_
#define HTDP_CALIBRATE_H_

#include <span>

#include "absl/status/statusor.h"
#include "htdp/design.h"
#include "htdp/estimator.h"
#include "htdp/laplace_profile.h"

namespace htdp {

struct CalibrationOptions {
  double relative_tolerance = 1e-6;
  double scale_cap = 1e9;
  // Scan base; <= 0 means 1e-6 * (max HT atom - min HT atom + 1).
  double scan_base = 0.0;
  int jobs = 1;
};

struct Calibration {
  // Smallest Laplace scale found with delta(eps; scale) <= target.
  double scale = 0.0;
  double delta_at_scale = 0.0;
  // delta(eps; scale * (1 - 1e-5)), re-evaluated; above the target whenever
  // `sandwich_verified` holds. Unset (0) when scale == 0.
  double delta_below_scale = 0.0;
  bool sandwich_verified = false;
  // False when the geometric scan saw delta increase with the scale; `scale`
  // is then the smallest feasible scanned value, not a bisection result.
  bool monotone = true;
  WorstCase witness;
};

// Smallest Laplace scale b making the HT total (eps, delta_target)-DP over
// `pairs`: returns 0 when sampling alone suffices, otherwise brackets with a
// geometric scan and bisects. Errors: EmptyPairList, InvalidEpsilon,
// InvalidDelta, Infeasible (target unreachable below the scale cap).
absl::StatusOr<Calibration> CalibrateScale(
    std::span<const PreparedPair> pairs, double eps, double delta_target,
    const CalibrationOptions& options = {});
absl::StatusOr<Calibration> CalibrateScale(
    const Design& design, std::span<const AdjacentPair> pairs, double eps,
    double delta_target, const CalibrationOptions& options = {});

}  // namespace htdp

#endif  // HTDP_CALIBRATE_H_
