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
#include "htdp/calibrate.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "absl/strings/str_cat.h"
#include "htdp/numeric.h"
#include "htdp/parallel.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

constexpr double kSandwichShrink = 1.0 - 1e-5;
constexpr double kMonotoneSlack = 1e-12;

double AtomRange(std::span<const PreparedPair> pairs) {
  double lo = kInfinity, hi = -kInfinity;
  for (const PreparedPair& p : pairs) {
    lo = std::min({lo, p.x.min_value(), p.x_prime.min_value()});
    hi = std::max({hi, p.x.max_value(), p.x_prime.max_value()});
  }
  return hi - lo;
}

}  // namespace

absl::StatusOr<Calibration> CalibrateScale(std::span<const PreparedPair> pairs,
                                           double eps, double delta_target,
                                           const CalibrationOptions& options) {
  if (pairs.empty()) {
    return InvalidArgument("EmptyPairList", "no adjacent pair supplied");
  }
  if (!(eps >= 0.0)) {
    return InvalidArgument("InvalidEpsilon", absl::StrCat("epsilon ", eps));
  }
  if (!(delta_target >= 0.0 && delta_target < 1.0)) {
    return InvalidArgument("InvalidDelta",
                           absl::StrCat("target delta ", delta_target));
  }
  const int jobs = options.jobs;
  auto delta_at = [&](double scale) {
    return WorstCaseDelta(pairs, scale, eps, jobs);
  };

  Calibration result;
  HTDP_ASSIGN_OR_RETURN(WorstCase at_zero, delta_at(0.0));
  if (at_zero.delta <= delta_target) {
    result.delta_at_scale = at_zero.delta;
    result.sandwich_verified = true;
    result.witness = at_zero;
    return result;
  }

  const double base = options.scan_base > 0.0
                          ? options.scan_base
                          : 1e-6 * (AtomRange(pairs) + 1.0);
  std::vector<double> scanned_scales;
  for (double b = base; b <= options.scale_cap; b *= 2.0) {
    scanned_scales.push_back(b);
  }
  // Scan points are independent; evaluate them together, then walk in order.
  std::vector<absl::StatusOr<WorstCase>> scanned(scanned_scales.size(),
                                                 WorstCase{});
  ParallelFor(scanned_scales.size(), jobs, [&](size_t k) {
    scanned[k] = WorstCaseDelta(pairs, scanned_scales[k], eps, 1);
  });

  std::optional<size_t> first_feasible;
  double previous = at_zero.delta;
  for (size_t k = 0; k < scanned.size(); ++k) {
    if (!scanned[k].ok()) return scanned[k].status();
    const double d = scanned[k]->delta;
    if (d > previous + kMonotoneSlack) result.monotone = false;
    previous = d;
    if (d <= delta_target) {
      first_feasible = k;
      break;
    }
  }
  if (!first_feasible) {
    return MakeError(absl::StatusCode::kOutOfRange, "Infeasible",
                     absl::StrCat("delta stays above ", delta_target,
                                  " up to scale ", options.scale_cap));
  }
  const size_t k = *first_feasible;
  if (!result.monotone) {
    result.scale = scanned_scales[k];
    result.delta_at_scale = scanned[k]->delta;
    result.witness = *scanned[k];
  } else {
    double lo = k == 0 ? 0.0 : scanned_scales[k - 1];
    double hi = scanned_scales[k];
    WorstCase at_hi = *scanned[k];
    while (hi - lo > options.relative_tolerance * hi) {
      const double mid = 0.5 * (lo + hi);
      HTDP_ASSIGN_OR_RETURN(WorstCase at_mid, delta_at(mid));
      if (at_mid.delta <= delta_target) {
        hi = mid;
        at_hi = at_mid;
      } else {
        lo = mid;
      }
    }
    result.scale = hi;
    result.delta_at_scale = at_hi.delta;
    result.witness = at_hi;
  }

  // Verify the sandwich by re-evaluation rather than trusting the search.
  HTDP_ASSIGN_OR_RETURN(WorstCase at_scale, delta_at(result.scale));
  HTDP_ASSIGN_OR_RETURN(WorstCase below, delta_at(result.scale * kSandwichShrink));
  result.delta_at_scale = at_scale.delta;
  result.delta_below_scale = below.delta;
  result.sandwich_verified =
      at_scale.delta <= delta_target && below.delta > delta_target;
  return result;
}

absl::StatusOr<Calibration> CalibrateScale(const Design& design,
                                           std::span<const AdjacentPair> pairs,
                                           double eps, double delta_target,
                                           const CalibrationOptions& options) {
  if (pairs.empty()) {
    return InvalidArgument("EmptyPairList", "no adjacent pair supplied");
  }
  HTDP_ASSIGN_OR_RETURN(std::vector<PreparedPair> prepared,
                        PreparePairs(design, pairs, options.jobs));
  return CalibrateScale(prepared, eps, delta_target, options);
}

}  // namespace htdp
