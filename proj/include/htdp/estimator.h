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

#ifndef HTDP_ESTIMATOR_H_
#define HTDP_ESTIMATOR_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "htdp/design.h"

namespace htdp {

// Value bounds shared by every dataset of a domain: each x_i lies in
// [value_min, value_max] and the total lies in [total_min, total_max].
struct DataBounds {
  double value_min = 0.0;
  double value_max = 1.0;
  double total_min = 0.0;
  double total_max = 0.0;
};

// A population characteristic vector inside its bounded domain.
class Dataset {
 public:
  std::span<const double> values() const { return values_; }
  double operator[](int i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }
  const DataBounds& bounds() const { return bounds_; }
  double Total() const;

 private:
  friend absl::StatusOr<Dataset> MakeDataset(std::vector<double> values,
                                             const DataBounds& bounds);
  std::vector<double> values_;
  DataBounds bounds_;
};

// Errors: InvalidBounds (requires N*mx <= mt < Mt <= N*Mx),
// ValueOutOfBounds, TotalOutOfBounds.
absl::StatusOr<Dataset> MakeDataset(std::vector<double> values,
                                    const DataBounds& bounds);

// Two datasets of the same domain differing at most at `unit`.
struct AdjacentPair {
  Dataset x;
  Dataset x_prime;
  int unit = 0;
};

// Errors: SizeMismatch, BoundsMismatch, InvalidUnit, NotAdjacent.
absl::StatusOr<AdjacentPair> MakeAdjacentPair(Dataset x, Dataset x_prime,
                                              int unit);

// Point masses of the noiseless estimator's law. Values strictly increasing,
// masses positive and summing to one.
struct Atom {
  double value = 0.0;
  double mass = 0.0;
};

class AtomicDistribution {
 public:
  std::span<const Atom> atoms() const { return atoms_; }
  size_t size() const { return atoms_.size(); }
  double min_value() const { return atoms_.front().value; }
  double max_value() const { return atoms_.back().value; }

  // Mass at `z`, matched with the coalescing tolerance; 0 when absent.
  double MassAt(double z) const;

 private:
  friend absl::StatusOr<AtomicDistribution> MakeAtomicDistribution(
      std::vector<Atom> atoms);
  std::vector<Atom> atoms_;
};

// Sorts atoms, coalesces values equal within 1e-9 * max(1, |v|), drops zero
// masses and renormalizes. Errors: EmptyDistribution, NegativeMass,
// MassesDoNotSumToOne (|sum - 1| > 1e-9).
absl::StatusOr<AtomicDistribution> MakeAtomicDistribution(
    std::vector<Atom> atoms);

// Horvitz-Thompson estimate sum_{i in s} x_i / pi_i; 0 for the empty sample.
// Errors: ZeroInclusionProbabilityInSample.
absl::StatusOr<double> HtValue(const Dataset& x, std::span<const int> sample,
                               std::span<const double> first_order);

// HT value of every support sample of `design`, in support order.
absl::StatusOr<std::vector<double>> HtValues(
    const Design& design, const Dataset& x,
    std::span<const double> first_order);

// Law of the HT total under `design` given X = x.
absl::StatusOr<AtomicDistribution> AtomDistribution(const Design& design,
                                                    const Dataset& x);
absl::StatusOr<AtomicDistribution> AtomDistribution(
    const Design& design, const Dataset& x,
    std::span<const double> first_order);

struct SupportBounds {
  double min = 0.0;
  double max = 0.0;
};

// Smallest and largest HT atom over all the given datasets.
// Errors: EmptyDatasetList.
absl::StatusOr<SupportBounds> ComputeSupportBounds(
    const Design& design, std::span<const Dataset> datasets);

// Every ordered binary adjacent pair (x_i = 0, x'_i = 1) of length `n` whose
// two totals lie in [total_min, total_max]. Enumerates 2^(n-1) * n pairs.
// Errors: InvalidBounds, TooLarge (n > 20).
absl::StatusOr<std::vector<AdjacentPair>> AllBinaryAdjacentPairs(
    int n, int total_min, int total_max);

}  // namespace htdp

#endif  // HTDP_ESTIMATOR_H_
