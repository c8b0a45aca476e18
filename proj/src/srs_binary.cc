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
#include "htdp/srs_binary.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/strings/str_cat.h"
#include "htdp/laplace_profile.h"
#include "htdp/numeric.h"
#include "htdp/parallel.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

double LogChoose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Worst delta over adjacent totals, each orientation evaluated explicitly.
template <typename PairDeltaFn>
absl::StatusOr<double> MaxOverAdjacentTotals(const SrsBinaryConfig& cfg,
                                             int jobs, PairDeltaFn&& fn) {
  const int count = cfg.total_max - cfg.total_min;
  std::vector<absl::StatusOr<double>> slots(count, 0.0);
  ParallelFor(count, jobs, [&](size_t k) {
    const int t = cfg.total_min + static_cast<int>(k);
    auto lower = HypergeomAtoms(cfg, t);
    auto upper = HypergeomAtoms(cfg, t + 1);
    if (!lower.ok() || !upper.ok()) {
      slots[k] = lower.ok() ? upper.status() : lower.status();
      return;
    }
    auto forward = fn(*lower, *upper);
    auto backward = fn(*upper, *lower);
    if (!forward.ok() || !backward.ok()) {
      slots[k] = forward.ok() ? backward.status() : forward.status();
      return;
    }
    slots[k] = std::max(*forward, *backward);
  });
  double worst = 0.0;
  for (const auto& slot : slots) {
    if (!slot.ok()) return slot.status();
    worst = std::max(worst, *slot);
  }
  return worst;
}

}  // namespace

absl::Status ValidateSrsBinaryConfig(const SrsBinaryConfig& cfg) {
  const int n = cfg.population_size;
  if (!(0 < cfg.sample_size && cfg.sample_size <= n && 0 <= cfg.total_min &&
        cfg.total_min < cfg.total_max && cfg.total_max <= n)) {
    return InvalidArgument(
        "InvalidConfig",
        absl::StrCat("need 0 < n <= N and 0 <= mt < Mt <= N, got N=", n,
                     " n=", cfg.sample_size, " mt=", cfg.total_min,
                     " Mt=", cfg.total_max));
  }
  return absl::OkStatus();
}

absl::StatusOr<AtomicDistribution> HypergeomAtoms(const SrsBinaryConfig& cfg,
                                                  int total) {
  HTDP_RETURN_IF_ERROR(ValidateSrsBinaryConfig(cfg));
  if (total < cfg.total_min || total > cfg.total_max) {
    return InvalidArgument("TotalOutOfRange",
                           absl::StrCat("t = ", total, " outside [",
                                        cfg.total_min, ", ", cfg.total_max, "]"));
  }
  const int big_n = cfg.population_size;
  const int n = cfg.sample_size;
  const int y_lo = std::max(0, n + total - big_n);
  const int y_hi = std::min(total, n);
  const double log_denominator = LogChoose(big_n, n);
  const double weight = static_cast<double>(big_n) / n;

  std::vector<Atom> atoms;
  atoms.reserve(y_hi - y_lo + 1);
  CompensatedSum sum;
  for (int y = y_lo; y <= y_hi; ++y) {
    const double mass = std::exp(LogChoose(total, y) +
                                 LogChoose(big_n - total, n - y) -
                                 log_denominator);
    atoms.push_back({weight * y, mass});
    sum.Add(mass);
  }
  const double norm = sum.Value();
  for (Atom& a : atoms) a.mass /= norm;
  return MakeAtomicDistribution(std::move(atoms));
}

absl::StatusOr<double> DeltaSrsNoiseless(const SrsBinaryConfig& cfg,
                                         double eps, int jobs) {
  HTDP_RETURN_IF_ERROR(ValidateSrsBinaryConfig(cfg));
  if (!(eps >= 0.0)) {
    return InvalidArgument("InvalidEpsilon", absl::StrCat("epsilon ", eps));
  }
  return MaxOverAdjacentTotals(
      cfg, jobs,
      [eps](const AtomicDistribution& a,
            const AtomicDistribution& b) -> absl::StatusOr<double> {
        return DeltaDiscrete(a, b, eps);
      });
}

absl::StatusOr<double> DeltaSrsLaplace(const SrsBinaryConfig& cfg,
                                       double scale, double eps, int jobs) {
  HTDP_RETURN_IF_ERROR(ValidateSrsBinaryConfig(cfg));
  if (scale == 0.0) return DeltaSrsNoiseless(cfg, eps, jobs);
  return MaxOverAdjacentTotals(
      cfg, jobs,
      [scale, eps](const AtomicDistribution& a,
                   const AtomicDistribution& b) -> absl::StatusOr<double> {
        HTDP_ASSIGN_OR_RETURN(LaplaceMixture ma, MakeLaplaceMixture(a, scale));
        HTDP_ASSIGN_OR_RETURN(LaplaceMixture mb, MakeLaplaceMixture(b, scale));
        return DeltaLaplace(ma, mb, eps);
      });
}

absl::StatusOr<double> EpsilonSrsNoiselessAtDeltaZero(
    const SrsBinaryConfig& cfg) {
  HTDP_RETURN_IF_ERROR(ValidateSrsBinaryConfig(cfg));
  const int big_n = cfg.population_size;
  const int n = cfg.sample_size;
  const int mt = cfg.total_min;
  const int upper_slack = big_n - cfg.total_max;
  if (std::min(mt, upper_slack) < n) return kInfinity;
  const double from_top =
      static_cast<double>(upper_slack + 1) / (upper_slack + 1 - n);
  const double from_bottom = static_cast<double>(mt + 1) / (mt + 1 - n);
  return std::log(std::max(from_top, from_bottom));
}

absl::StatusOr<double> EpsilonSrsNoiseless(const SrsBinaryConfig& cfg,
                                           double delta_target,
                                           double eps_hi) {
  HTDP_RETURN_IF_ERROR(ValidateSrsBinaryConfig(cfg));
  if (!(delta_target > 0.0 && delta_target <= 1.0)) {
    return InvalidArgument("InvalidDelta",
                           absl::StrCat("target delta ", delta_target));
  }
  HTDP_ASSIGN_OR_RETURN(double at_zero, DeltaSrsNoiseless(cfg, 0.0));
  if (at_zero <= delta_target) return 0.0;
  HTDP_ASSIGN_OR_RETURN(double at_hi, DeltaSrsNoiseless(cfg, eps_hi));
  if (at_hi > delta_target) return kInfinity;
  double lo = 0.0, hi = eps_hi;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    HTDP_ASSIGN_OR_RETURN(double d, DeltaSrsNoiseless(cfg, mid));
    (d <= delta_target ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace htdp
