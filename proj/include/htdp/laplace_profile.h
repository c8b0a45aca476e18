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

#ifndef HTDP_LAPLACE_PROFILE_H_
#define HTDP_LAPLACE_PROFILE_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "htdp/design.h"
#include "htdp/estimator.h"

namespace htdp {

// Law of HT + scale * W with W ~ Laplace(0, 1). A zero scale is the atomic
// law itself (density with respect to counting measure).
struct LaplaceMixture {
  AtomicDistribution atoms;
  double scale = 0.0;
};

// Errors: InvalidScale (negative or non-finite).
absl::StatusOr<LaplaceMixture> MakeLaplaceMixture(AtomicDistribution atoms,
                                                  double scale);

double MixtureDensity(const LaplaceMixture& m, double z);
// log of MixtureDensity, evaluated without underflow; -inf off the support.
double LogMixtureDensity(const LaplaceMixture& m, double z);

// sum_z (f_x(z) - e^eps f_x'(z))_+ over the union of atoms, in [0, 1].
double DeltaDiscrete(const AtomicDistribution& fx,
                     const AtomicDistribution& fxp, double eps);

// Exact integral of (f_x - e^eps f_x')_+ for two Laplace mixtures of the same
// positive scale. Between consecutive knots the integrand is
// a e^{-u/b} + c e^{-(L-u)/b} with at most one sign change, integrated in
// closed form; both tails are closed forms too.
// Errors: MismatchedScales, ZeroScale, InvalidEpsilon (eps < 0 or > 700).
absl::StatusOr<double> DeltaLaplace(const LaplaceMixture& mx,
                                    const LaplaceMixture& mxp, double eps);

// DeltaDiscrete or DeltaLaplace, depending on the common scale.
absl::StatusOr<double> DeltaForScale(const LaplaceMixture& mx,
                                     const LaplaceMixture& mxp, double eps);

// sup_z f_x(z) / f_x'(z). +inf when the scale is zero and some atom of x is
// not an atom of x'. For a positive scale the ratio is piecewise monotone
// between knots and constant beyond the extreme knots, so the sup is the
// maximum over knots.
double DensityRatioSup(const LaplaceMixture& mx, const LaplaceMixture& mxp);
double LogDensityRatioSup(const LaplaceMixture& mx, const LaplaceMixture& mxp);

// Limits of f_x / f_x' as z -> -inf and z -> +inf (positive scale only),
// from the closed-form tail constants.
struct TailRatios {
  double left = 0.0;
  double right = 0.0;
};
TailRatios ComputeTailRatios(const LaplaceMixture& mx,
                             const LaplaceMixture& mxp);

// inf{eps >= 0 : delta(eps) <= delta_target} by bisection on [0, eps_hi] to
// an absolute tolerance of 1e-9. Returns +inf when delta(eps_hi) is still
// above the target. Errors: InvalidDelta (target outside (0, 1]),
// InvalidEpsilon.
absl::StatusOr<double> EpsilonAtDelta(const LaplaceMixture& mx,
                                      const LaplaceMixture& mxp,
                                      double delta_target, double eps_hi);

enum class Direction { kForward, kBackward };
absl::string_view DirectionName(Direction dir);  // "x->xp" / "xp->x"

// Atom laws of both sides of an adjacent pair under one design.
struct PreparedPair {
  AtomicDistribution x;
  AtomicDistribution x_prime;
  int unit = 0;
};

absl::StatusOr<std::vector<PreparedPair>> PreparePairs(
    const Design& design, std::span<const AdjacentPair> pairs, int jobs = 1);

// delta(eps) for one ordered orientation of a prepared pair at scale b.
absl::StatusOr<double> PairDelta(const PreparedPair& pair, double scale,
                                 double eps, Direction dir);

struct Witness {
  size_t pair_index = 0;
  int unit = 0;
  Direction direction = Direction::kForward;
};

struct WorstCase {
  double delta = 0.0;
  Witness witness;
};

// max over pairs and both orientations; ties go to the lowest pair index,
// forward before backward. Errors: EmptyPairList.
absl::StatusOr<WorstCase> WorstCaseDelta(std::span<const PreparedPair> pairs,
                                         double scale, double eps,
                                         int jobs = 1);

struct ProfilePoint {
  double epsilon = 0.0;
  double delta = 0.0;
  Witness witness;
};

struct PrivacyProfile {
  double scale = 0.0;
  std::vector<ProfilePoint> points;
};

// delta(eps) = max over the supplied pairs (both orientations) for every eps
// of an ascending grid. Output is independent of `jobs`.
// Errors: EmptyPairList, InvalidGrid.
absl::StatusOr<PrivacyProfile> ComputeProfile(
    const Design& design, std::span<const AdjacentPair> pairs, double scale,
    std::span<const double> eps_grid, int jobs = 1);
absl::StatusOr<PrivacyProfile> ComputeProfile(
    std::span<const PreparedPair> pairs, double scale,
    std::span<const double> eps_grid, int jobs = 1);

// Candidate worst-case pairs differing at `unit`: x_i = mx, x'_i = Mx, with
// every other unit held at mx or at Mx. Candidates violating the total
// bounds are dropped. Errors: NoFeasiblePair.
absl::StatusOr<std::vector<AdjacentPair>> ExtremalPairs(
    const Design& design, const DataBounds& bounds, int unit);

// ExtremalPairs for every unit, skipping units without a feasible pair.
absl::StatusOr<std::vector<AdjacentPair>> ExtremalPairsAllUnits(
    const Design& design, const DataBounds& bounds);

}  // namespace htdp

#endif  // HTDP_LAPLACE_PROFILE_H_
