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
#include "htdp/estimator.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "htdp/numeric.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

absl::Status ValidateBounds(const DataBounds& b, int n) {
  if (!(b.value_min <= b.value_max) || !(n * b.value_min <= b.total_min) ||
      !(b.total_min < b.total_max) || !(b.total_max <= n * b.value_max)) {
    return InvalidArgument(
        "InvalidBounds",
        absl::StrCat("need N*mx <= mt < Mt <= N*Mx, got N=", n,
                     " mx=", b.value_min, " Mx=", b.value_max,
                     " mt=", b.total_min, " Mt=", b.total_max));
  }
  return absl::OkStatus();
}

bool SameBounds(const DataBounds& a, const DataBounds& b) {
  return a.value_min == b.value_min && a.value_max == b.value_max &&
         a.total_min == b.total_min && a.total_max == b.total_max;
}

}  // namespace

double Dataset::Total() const {
  CompensatedSum sum;
  for (double v : values_) sum.Add(v);
  return sum.Value();
}

absl::StatusOr<Dataset> MakeDataset(std::vector<double> values,
                                    const DataBounds& bounds) {
  const int n = static_cast<int>(values.size());
  if (n == 0) return InvalidArgument("InvalidBounds", "empty dataset");
  HTDP_RETURN_IF_ERROR(ValidateBounds(bounds, n));
  for (int i = 0; i < n; ++i) {
    if (!(values[i] >= bounds.value_min && values[i] <= bounds.value_max)) {
      return InvalidArgument("ValueOutOfBounds",
                             absl::StrCat("x[", i, "] = ", values[i]));
    }
  }
  Dataset d;
  d.values_ = std::move(values);
  d.bounds_ = bounds;
  const double total = d.Total();
  if (total < bounds.total_min || total > bounds.total_max) {
    return InvalidArgument("TotalOutOfBounds",
                           absl::StrCat("total ", total, " outside [",
                                        bounds.total_min, ", ",
                                        bounds.total_max, "]"));
  }
  return d;
}

absl::StatusOr<AdjacentPair> MakeAdjacentPair(Dataset x, Dataset x_prime,
                                              int unit) {
  if (x.size() != x_prime.size()) {
    return InvalidArgument("SizeMismatch", "datasets differ in length");
  }
  if (!SameBounds(x.bounds(), x_prime.bounds())) {
    return InvalidArgument("BoundsMismatch", "datasets have different bounds");
  }
  if (unit < 0 || unit >= x.size()) {
    return InvalidArgument("InvalidUnit", absl::StrCat("unit ", unit));
  }
  for (int j = 0; j < x.size(); ++j) {
    if (j != unit && x[j] != x_prime[j]) {
      return InvalidArgument(
          "NotAdjacent",
          absl::StrCat("datasets differ at unit ", j, " besides unit ", unit));
    }
  }
  return AdjacentPair{std::move(x), std::move(x_prime), unit};
}

double AtomicDistribution::MassAt(double z) const {
  auto it = std::lower_bound(
      atoms_.begin(), atoms_.end(), z,
      [](const Atom& a, double v) { return a.value < v && !NearlyEqualValues(a.value, v); });
  if (it != atoms_.end() && NearlyEqualValues(it->value, z)) return it->mass;
  return 0.0;
}

absl::StatusOr<AtomicDistribution> MakeAtomicDistribution(
    std::vector<Atom> atoms) {
  CompensatedSum total;
  for (const Atom& a : atoms) {
    if (!(a.mass >= 0.0) || !std::isfinite(a.value)) {
      return InvalidArgument("NegativeMass",
                             absl::StrCat("atom at ", a.value, " has mass ", a.mass));
    }
    total.Add(a.mass);
  }
  std::erase_if(atoms, [](const Atom& a) { return a.mass == 0.0; });
  if (atoms.empty()) {
    return InvalidArgument("EmptyDistribution", "no atom with positive mass");
  }
  const double sum = total.Value();
  if (std::abs(sum - 1.0) > 1e-9) {
    return InvalidArgument("MassesDoNotSumToOne",
                           absl::StrCat("masses sum to ", sum));
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });

  AtomicDistribution dist;
  size_t k = 0;
  while (k < atoms.size()) {
    const double anchor = atoms[k].value;
    CompensatedSum mass;
    while (k < atoms.size() && NearlyEqualValues(atoms[k].value, anchor)) {
      mass.Add(atoms[k].mass);
      ++k;
    }
    dist.atoms_.push_back({anchor, mass.Value()});
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    for (Atom& a : dist.atoms_) a.mass /= sum;
  }
  return dist;
}

absl::StatusOr<double> HtValue(const Dataset& x, std::span<const int> sample,
                               std::span<const double> first_order) {
  double total = 0.0;
  for (int i : sample) {
    if (!(first_order[i] > 0.0)) {
      return InvalidArgument("ZeroInclusionProbabilityInSample",
                             absl::StrCat("pi_", i, " = ", first_order[i]));
    }
    total += x[i] / first_order[i];
  }
  return total;
}

absl::StatusOr<std::vector<double>> HtValues(
    const Design& design, const Dataset& x,
    std::span<const double> first_order) {
  if (x.size() != design.population_size()) {
    return InvalidArgument(
        "SizeMismatch", absl::StrCat("dataset of length ", x.size(),
                                     " for population of size ",
                                     design.population_size()));
  }
  std::vector<double> values;
  values.reserve(design.support_size());
  for (const WeightedSample& ws : design.support()) {
    HTDP_ASSIGN_OR_RETURN(double v, HtValue(x, ws.units, first_order));
    values.push_back(v);
  }
  return values;
}

absl::StatusOr<AtomicDistribution> AtomDistribution(
    const Design& design, const Dataset& x,
    std::span<const double> first_order) {
  HTDP_ASSIGN_OR_RETURN(std::vector<double> values,
                        HtValues(design, x, first_order));
  std::vector<Atom> atoms;
  atoms.reserve(values.size());
  const auto support = design.support();
  for (size_t k = 0; k < values.size(); ++k) {
    atoms.push_back({values[k], support[k].prob});
  }
  return MakeAtomicDistribution(std::move(atoms));
}

absl::StatusOr<AtomicDistribution> AtomDistribution(const Design& design,
                                                    const Dataset& x) {
  HTDP_ASSIGN_OR_RETURN(InclusionProbs pi, InclusionProbabilities(design, 1));
  return AtomDistribution(design, x, pi.first);
}

absl::StatusOr<SupportBounds> ComputeSupportBounds(
    const Design& design, std::span<const Dataset> datasets) {
  if (datasets.empty()) {
    return InvalidArgument("EmptyDatasetList", "no dataset given");
  }
  HTDP_ASSIGN_OR_RETURN(InclusionProbs pi, InclusionProbabilities(design, 1));
  SupportBounds bounds{kInfinity, -kInfinity};
  for (const Dataset& x : datasets) {
    HTDP_ASSIGN_OR_RETURN(AtomicDistribution dist,
                          AtomDistribution(design, x, pi.first));
    bounds.min = std::min(bounds.min, dist.min_value());
    bounds.max = std::max(bounds.max, dist.max_value());
  }
  return bounds;
}

absl::StatusOr<std::vector<AdjacentPair>> AllBinaryAdjacentPairs(
    int n, int total_min, int total_max) {
  if (n <= 0 || n > 20) {
    return InvalidArgument("TooLarge",
                           absl::StrCat("binary pair enumeration needs 1 <= N <= 20, got ", n));
  }
  const DataBounds bounds{0.0, 1.0, double(total_min), double(total_max)};
  HTDP_RETURN_IF_ERROR(ValidateBounds(bounds, n));
  std::vector<AdjacentPair> pairs;
  for (int unit = 0; unit < n; ++unit) {
    for (uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
      std::vector<double> x(n, 0.0);
      int total = 0;
      for (int j = 0, bit = 0; j < n; ++j) {
        if (j == unit) continue;
        if (rest >> bit & 1u) {
          x[j] = 1.0;
          ++total;
        }
        ++bit;
      }
      if (total < total_min || total + 1 > total_max) continue;
      std::vector<double> xp = x;
      xp[unit] = 1.0;
      HTDP_ASSIGN_OR_RETURN(Dataset dx, MakeDataset(std::move(x), bounds));
      HTDP_ASSIGN_OR_RETURN(Dataset dxp, MakeDataset(std::move(xp), bounds));
      pairs.push_back({std::move(dx), std::move(dxp), unit});
    }
  }
  return pairs;
}

}  // namespace htdp
