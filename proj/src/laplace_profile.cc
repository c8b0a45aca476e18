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
#include "htdp/laplace_profile.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "htdp/numeric.h"
#include "htdp/parallel.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

constexpr double kDeltaFloor = 1e-15;
constexpr double kRootSnap = 1e-12;
constexpr double kMaxEpsilon = 700.0;

struct Knot {
  double value;
  double mass_x;
  double mass_xp;
};

// Union of atom values; values equal within the coalescing tolerance share a
// knot.
std::vector<Knot> MergeKnots(const AtomicDistribution& fx,
                             const AtomicDistribution& fxp) {
  const auto a = fx.atoms();
  const auto b = fxp.atoms();
  std::vector<Knot> knots;
  knots.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].value < b[j].value &&
                          !NearlyEqualValues(a[i].value, b[j].value))) {
      knots.push_back({a[i].value, a[i].mass, 0.0});
      ++i;
    } else if (i == a.size() || !NearlyEqualValues(a[i].value, b[j].value)) {
      knots.push_back({b[j].value, 0.0, b[j].mass});
      ++j;
    } else {
      knots.push_back({a[i].value, a[i].mass, b[j].mass});
      ++i;
      ++j;
    }
  }
  return knots;
}

double FinalizeDelta(double delta) {
  delta = std::clamp(delta, 0.0, 1.0);
  return delta < kDeltaFloor ? 0.0 : delta;
}

// Integral over v in [0, len] of (a e^{-v} + c e^{v - len})_+.
double SegmentPositivePart(double a, double c, double len) {
  if (a >= 0.0 && c >= 0.0) return (a + c) * -std::expm1(-len);
  if (a <= 0.0 && c <= 0.0) return 0.0;
  // One sign change at e^{2v} = (a / -c) e^{len}; the integrand is monotone.
  double root = 0.5 * (len + std::log(-a / c));
  root = std::clamp(root, 0.0, len);
  if (root < kRootSnap) root = 0.0;
  if (len - root < kRootSnap) root = len;
  if (a > 0.0) {
    // Positive on [0, root].
    return -a * std::expm1(-root) + c * std::exp(root - len) * -std::expm1(-root);
  }
  // Positive on [root, len].
  return a * std::exp(-root) * -std::expm1(root - len) +
         c * -std::expm1(root - len);
}

double LogMixtureWeightedExp(std::span<const Atom> atoms, double sign,
                             double scale) {
  std::vector<double> terms;
  terms.reserve(atoms.size());
  for (const Atom& a : atoms) {
    terms.push_back(std::log(a.mass) + sign * a.value / scale);
  }
  return LogSumExp(terms);
}

absl::Status ValidateEpsilon(double eps) {
  if (!(eps >= 0.0) || eps > kMaxEpsilon) {
    return InvalidArgument("InvalidEpsilon",
                           absl::StrCat("epsilon must lie in [0, ", kMaxEpsilon,
                                        "], got ", eps));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<LaplaceMixture> MakeLaplaceMixture(AtomicDistribution atoms,
                                                  double scale) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    return InvalidArgument("InvalidScale", absl::StrCat("scale b = ", scale));
  }
  return LaplaceMixture{std::move(atoms), scale};
}

double LogMixtureDensity(const LaplaceMixture& m, double z) {
  if (m.scale == 0.0) {
    const double mass = m.atoms.MassAt(z);
    return mass > 0.0 ? std::log(mass) : -kInfinity;
  }
  std::vector<double> terms;
  terms.reserve(m.atoms.size());
  for (const Atom& a : m.atoms.atoms()) {
    terms.push_back(std::log(a.mass) - std::abs(z - a.value) / m.scale);
  }
  return LogSumExp(terms) - std::log(2.0 * m.scale);
}

double MixtureDensity(const LaplaceMixture& m, double z) {
  if (m.scale == 0.0) return m.atoms.MassAt(z);
  CompensatedSum sum;
  for (const Atom& a : m.atoms.atoms()) {
    sum.Add(a.mass * std::exp(-std::abs(z - a.value) / m.scale));
  }
  return sum.Value() / (2.0 * m.scale);
}

double DeltaDiscrete(const AtomicDistribution& fx,
                     const AtomicDistribution& fxp, double eps) {
  const double factor = std::exp(eps);
  CompensatedSum sum;
  for (const Knot& k : MergeKnots(fx, fxp)) {
    if (k.mass_xp == 0.0) {
      sum.Add(k.mass_x);
      continue;
    }
    const double term = k.mass_x - factor * k.mass_xp;
    if (term > 0.0) sum.Add(term);
  }
  return FinalizeDelta(sum.Value());
}

absl::StatusOr<double> DeltaLaplace(const LaplaceMixture& mx,
                                    const LaplaceMixture& mxp, double eps) {
  if (mx.scale != mxp.scale) {
    return InvalidArgument("MismatchedScales",
                           absl::StrCat(mx.scale, " vs ", mxp.scale));
  }
  if (mx.scale == 0.0) {
    return InvalidArgument("ZeroScale",
                           "zero scale needs the discrete computation");
  }
  HTDP_RETURN_IF_ERROR(ValidateEpsilon(eps));
  const double b = mx.scale;
  const double factor = std::exp(eps);
  const std::vector<Knot> knots = MergeKnots(mx.atoms, mxp.atoms);
  const size_t n = knots.size();

  std::vector<double> weight(n);
  for (size_t k = 0; k < n; ++k) {
    weight[k] = knots[k].mass_x - factor * knots[k].mass_xp;
  }
  // left[j]  = sum_{k <= j} w_k e^{-(z_j - z_k)/b}
  // right[j] = sum_{k >= j} w_k e^{-(z_k - z_j)/b}
  // Every exponent is non-positive, so nothing overflows for large z/b.
  std::vector<double> left(n), right(n);
  left[0] = weight[0];
  for (size_t k = 1; k < n; ++k) {
    left[k] = left[k - 1] * std::exp(-(knots[k].value - knots[k - 1].value) / b) +
              weight[k];
  }
  right[n - 1] = weight[n - 1];
  for (size_t k = n - 1; k-- > 0;) {
    right[k] = right[k + 1] * std::exp(-(knots[k + 1].value - knots[k].value) / b) +
               weight[k];
  }

  // The 1/(2b) density normalization times the dz = b dv change of variable
  // leaves a factor 1/2 everywhere.
  CompensatedSum total;
  total.Add(std::max(right[0], 0.0));
  total.Add(std::max(left[n - 1], 0.0));
  for (size_t k = 0; k + 1 < n; ++k) {
    const double len = (knots[k + 1].value - knots[k].value) / b;
    total.Add(SegmentPositivePart(left[k], right[k + 1], len));
  }
  return FinalizeDelta(0.5 * total.Value());
}

absl::StatusOr<double> DeltaForScale(const LaplaceMixture& mx,
                                     const LaplaceMixture& mxp, double eps) {
  if (mx.scale != mxp.scale) {
    return InvalidArgument("MismatchedScales",
                           absl::StrCat(mx.scale, " vs ", mxp.scale));
  }
  if (mx.scale == 0.0) {
    if (!(eps >= 0.0)) {
      return InvalidArgument("InvalidEpsilon", absl::StrCat("epsilon ", eps));
    }
    return DeltaDiscrete(mx.atoms, mxp.atoms, eps);
  }
  return DeltaLaplace(mx, mxp, eps);
}

double LogDensityRatioSup(const LaplaceMixture& mx, const LaplaceMixture& mxp) {
  double best = -kInfinity;
  if (mx.scale == 0.0 || mxp.scale == 0.0) {
    for (const Atom& a : mx.atoms.atoms()) {
      const double other = mxp.atoms.MassAt(a.value);
      if (other == 0.0) return kInfinity;
      best = std::max(best, std::log(a.mass) - std::log(other));
    }
    return best;
  }
  for (const Knot& k : MergeKnots(mx.atoms, mxp.atoms)) {
    best = std::max(best, LogMixtureDensity(mx, k.value) -
                              LogMixtureDensity(mxp, k.value));
  }
  return best;
}

double DensityRatioSup(const LaplaceMixture& mx, const LaplaceMixture& mxp) {
  return std::exp(LogDensityRatioSup(mx, mxp));
}

TailRatios ComputeTailRatios(const LaplaceMixture& mx,
                             const LaplaceMixture& mxp) {
  const double b = mx.scale;
  return TailRatios{
      std::exp(LogMixtureWeightedExp(mx.atoms.atoms(), -1.0, b) -
               LogMixtureWeightedExp(mxp.atoms.atoms(), -1.0, b)),
      std::exp(LogMixtureWeightedExp(mx.atoms.atoms(), 1.0, b) -
               LogMixtureWeightedExp(mxp.atoms.atoms(), 1.0, b))};
}

absl::StatusOr<double> EpsilonAtDelta(const LaplaceMixture& mx,
                                      const LaplaceMixture& mxp,
                                      double delta_target, double eps_hi) {
  if (!(delta_target > 0.0 && delta_target <= 1.0)) {
    return InvalidArgument("InvalidDelta",
                           absl::StrCat("target delta ", delta_target));
  }
  HTDP_RETURN_IF_ERROR(ValidateEpsilon(eps_hi));
  HTDP_ASSIGN_OR_RETURN(double at_zero, DeltaForScale(mx, mxp, 0.0));
  if (at_zero <= delta_target) return 0.0;
  HTDP_ASSIGN_OR_RETURN(double at_hi, DeltaForScale(mx, mxp, eps_hi));
  if (at_hi > delta_target) return kInfinity;
  double lo = 0.0, hi = eps_hi;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    HTDP_ASSIGN_OR_RETURN(double d, DeltaForScale(mx, mxp, mid));
    (d <= delta_target ? hi : lo) = mid;
  }
  return hi;
}

absl::string_view DirectionName(Direction dir) {
  return dir == Direction::kForward ? "x->xp" : "xp->x";
}

absl::StatusOr<std::vector<PreparedPair>> PreparePairs(
    const Design& design, std::span<const AdjacentPair> pairs, int jobs) {
  HTDP_ASSIGN_OR_RETURN(InclusionProbs pi, InclusionProbabilities(design, 1));
  std::vector<absl::StatusOr<PreparedPair>> slots(pairs.size(),
                                                  absl::UnknownError(""));
  ParallelFor(pairs.size(), jobs, [&](size_t k) {
    auto fx = AtomDistribution(design, pairs[k].x, pi.first);
    if (!fx.ok()) {
      slots[k] = fx.status();
      return;
    }
    auto fxp = AtomDistribution(design, pairs[k].x_prime, pi.first);
    if (!fxp.ok()) {
      slots[k] = fxp.status();
      return;
    }
    slots[k] = PreparedPair{*std::move(fx), *std::move(fxp), pairs[k].unit};
  });
  std::vector<PreparedPair> prepared;
  prepared.reserve(pairs.size());
  for (auto& slot : slots) {
    if (!slot.ok()) return slot.status();
    prepared.push_back(*std::move(slot));
  }
  return prepared;
}

absl::StatusOr<double> PairDelta(const PreparedPair& pair, double scale,
                                 double eps, Direction dir) {
  const AtomicDistribution& from =
      dir == Direction::kForward ? pair.x : pair.x_prime;
  const AtomicDistribution& to =
      dir == Direction::kForward ? pair.x_prime : pair.x;
  if (scale == 0.0) {
    if (!(eps >= 0.0)) {
      return InvalidArgument("InvalidEpsilon", absl::StrCat("epsilon ", eps));
    }
    return DeltaDiscrete(from, to, eps);
  }
  HTDP_ASSIGN_OR_RETURN(LaplaceMixture mx, MakeLaplaceMixture(from, scale));
  HTDP_ASSIGN_OR_RETURN(LaplaceMixture mxp, MakeLaplaceMixture(to, scale));
  return DeltaLaplace(mx, mxp, eps);
}

absl::StatusOr<WorstCase> WorstCaseDelta(std::span<const PreparedPair> pairs,
                                         double scale, double eps, int jobs) {
  const double grid[] = {eps};
  HTDP_ASSIGN_OR_RETURN(PrivacyProfile profile,
                        ComputeProfile(pairs, scale, grid, jobs));
  return WorstCase{profile.points[0].delta, profile.points[0].witness};
}

absl::StatusOr<PrivacyProfile> ComputeProfile(
    std::span<const PreparedPair> pairs, double scale,
    std::span<const double> eps_grid, int jobs) {
  if (pairs.empty()) {
    return InvalidArgument("EmptyPairList", "no adjacent pair supplied");
  }
  if (eps_grid.empty()) return InvalidArgument("InvalidGrid", "empty grid");
  for (size_t k = 0; k < eps_grid.size(); ++k) {
    if (!(eps_grid[k] >= 0.0) || (k > 0 && !(eps_grid[k] > eps_grid[k - 1]))) {
      return InvalidArgument(
          "InvalidGrid", "epsilon grid must be non-negative and increasing");
    }
  }
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    return InvalidArgument("InvalidScale", absl::StrCat("scale b = ", scale));
  }

  // cells[(pair * grid + e) * 2 + orientation]
  const size_t grid = eps_grid.size();
  std::vector<double> cells(pairs.size() * grid * 2, 0.0);
  std::vector<absl::Status> errors(pairs.size());
  ParallelFor(pairs.size(), jobs, [&](size_t p) {
    for (size_t e = 0; e < grid; ++e) {
      for (int o = 0; o < 2; ++o) {
        auto d = PairDelta(pairs[p], scale, eps_grid[e],
                           o == 0 ? Direction::kForward : Direction::kBackward);
        if (!d.ok()) {
          errors[p] = d.status();
          return;
        }
        cells[(p * grid + e) * 2 + o] = *d;
      }
    }
  });
  for (const absl::Status& s : errors) HTDP_RETURN_IF_ERROR(s);

  PrivacyProfile profile;
  profile.scale = scale;
  profile.points.reserve(grid);
  for (size_t e = 0; e < grid; ++e) {
    ProfilePoint point{eps_grid[e], -1.0, {}};
    for (size_t p = 0; p < pairs.size(); ++p) {
      for (int o = 0; o < 2; ++o) {
        const double d = cells[(p * grid + e) * 2 + o];
        if (d > point.delta) {
          point.delta = d;
          point.witness = {p, pairs[p].unit,
                           o == 0 ? Direction::kForward : Direction::kBackward};
        }
      }
    }
    if (!profile.points.empty()) {
      const double prev = profile.points.back().delta;
      if (point.delta > prev + 1e-12) {
        return MakeError(absl::StatusCode::kInternal, "NonMonotoneProfile",
                         absl::StrCat("delta rises from ", prev, " to ",
                                      point.delta, " at eps ", eps_grid[e]));
      }
      point.delta = std::min(point.delta, prev);
    }
    profile.points.push_back(point);
  }
  return profile;
}

absl::StatusOr<PrivacyProfile> ComputeProfile(
    const Design& design, std::span<const AdjacentPair> pairs, double scale,
    std::span<const double> eps_grid, int jobs) {
  if (pairs.empty()) {
    return InvalidArgument("EmptyPairList", "no adjacent pair supplied");
  }
  HTDP_ASSIGN_OR_RETURN(std::vector<PreparedPair> prepared,
                        PreparePairs(design, pairs, jobs));
  return ComputeProfile(prepared, scale, eps_grid, jobs);
}

absl::StatusOr<std::vector<AdjacentPair>> ExtremalPairs(
    const Design& design, const DataBounds& bounds, int unit) {
  const int n = design.population_size();
  if (unit < 0 || unit >= n) {
    return InvalidArgument("InvalidUnit", absl::StrCat("unit ", unit));
  }
  std::vector<AdjacentPair> pairs;
  for (double anchor : {bounds.value_min, bounds.value_max}) {
    if (n == 1 && !pairs.empty()) break;
    std::vector<double> x(n, anchor);
    x[unit] = bounds.value_min;
    std::vector<double> xp = x;
    xp[unit] = bounds.value_max;
    auto dx = MakeDataset(std::move(x), bounds);
    auto dxp = MakeDataset(std::move(xp), bounds);
    if (!dx.ok() && ErrorKind(dx.status()) == "InvalidBounds") {
      return dx.status();
    }
    if (!dx.ok() || !dxp.ok()) continue;
    HTDP_ASSIGN_OR_RETURN(AdjacentPair pair,
                          MakeAdjacentPair(*std::move(dx), *std::move(dxp), unit));
    pairs.push_back(std::move(pair));
  }
  if (pairs.empty()) {
    return InvalidArgument(
        "NoFeasiblePair",
        absl::StrCat("total bounds exclude every extremal pair at unit ", unit));
  }
  return pairs;
}

absl::StatusOr<std::vector<AdjacentPair>> ExtremalPairsAllUnits(
    const Design& design, const DataBounds& bounds) {
  std::vector<AdjacentPair> all;
  for (int unit = 0; unit < design.population_size(); ++unit) {
    auto pairs = ExtremalPairs(design, bounds, unit);
    if (!pairs.ok()) {
      if (ErrorKind(pairs.status()) == "NoFeasiblePair") continue;
      return pairs.status();
    }
    for (AdjacentPair& p : *pairs) all.push_back(std::move(p));
  }
  if (all.empty()) {
    return InvalidArgument("NoFeasiblePair",
                           "total bounds exclude every extremal pair");
  }
  return all;
}

}  // namespace htdp
