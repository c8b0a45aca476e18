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

#ifndef HTDP_DESIGN_H_
#define HTDP_DESIGN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace htdp {

// Sorted, duplicate-free unit ids in [0, N).
using Sample = std::vector<int>;

struct WeightedSample {
  Sample units;
  double prob = 0.0;
};

// Parameters of a simple-random-sampling design, kept so the design can be
// serialized back in its compact form.
struct SrsParams {
  int population_size = 0;
  int sample_size = 0;
};

// An enumerable without-replacement sampling design: a probability law over
// subsets of the population {0, ..., N-1}. Immutable after construction.
//
// The support excludes zero-probability samples and is ordered canonically
// (by size, then lexicographically), so iteration order is reproducible.
class Design {
 public:
  int population_size() const { return population_size_; }
  std::span<const WeightedSample> support() const { return support_; }
  size_t support_size() const { return support_.size(); }
  const std::optional<SrsParams>& srs_params() const { return srs_; }

 private:
  friend absl::StatusOr<Design> MakeExplicitDesign(
      std::vector<WeightedSample> samples, std::optional<int> population_size);
  friend absl::StatusOr<Design> MakeSrsDesign(int population_size,
                                              int sample_size,
                                              uint64_t enumeration_cap);

  int population_size_ = 0;
  std::vector<WeightedSample> support_;
  std::optional<SrsParams> srs_;
};

inline constexpr double kDesignSumTolerance = 1e-9;
inline constexpr double kDesignNormalizedTolerance = 1e-12;
inline constexpr uint64_t kDefaultEnumerationCap = 2'000'000;

// Builds a design from an explicit support. Unit ids inside a sample are
// treated as a set. When `population_size` is absent it is inferred as
// 1 + the largest unit id.
//
// Errors: EmptySupport, InvalidUnit, NegativeProbability,
// ProbabilitiesDoNotSumToOne (|sum - 1| > 1e-9), DuplicateSample.
absl::StatusOr<Design> MakeExplicitDesign(
    std::vector<WeightedSample> samples,
    std::optional<int> population_size = std::nullopt);

// All size-n subsets of {0..N-1}, each with probability 1 / C(N, n).
// Errors: InvalidDesign, EnumerationTooLarge (C(N, n) > cap).
absl::StatusOr<Design> MakeSrsDesign(
    int population_size, int sample_size,
    uint64_t enumeration_cap = kDefaultEnumerationCap);

// Dense symmetric N x N matrix stored row-major.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n) : n_(n), data_(size_t(n) * n, 0.0) {}

  int size() const { return n_; }
  double operator()(int i, int j) const { return data_[Index(i, j)]; }
  double& at(int i, int j) { return data_[Index(i, j)]; }

 private:
  size_t Index(int i, int j) const { return size_t(i) * n_ + j; }

  int n_ = 0;
  std::vector<double> data_;
};

// Inclusion probabilities of a design.
//   first[i]       = P(i in S)
//   second(i, j)   = P({i, j} in S), with second(i, i) = first[i]
//   third          = present only when order 3 was requested; indexed
//                    third[(i * N + j) * N + l].
struct InclusionProbs {
  std::vector<double> first;
  SymmetricMatrix second;
  std::vector<double> third;

  double Third(int i, int j, int l) const {
    const size_t n = first.size();
    return third[(size_t(i) * n + j) * n + l];
  }
};

// Exact (compensated) sums over the support. `order` is 1, 2 or 3; the
// second-order matrix is filled for order >= 2 and left empty otherwise.
absl::StatusOr<InclusionProbs> InclusionProbabilities(const Design& design,
                                                      int order = 2);

// pi_{i,j,l} for a fixed i, as an N x N matrix over (j, l). Diagonal and
// repeated indices follow set semantics: slice(j, j) = pi_{i,j},
// slice(i, l) = pi_{i,l}.
SymmetricMatrix ThirdOrderSlice(const Design& design, int unit);

}  // namespace htdp

#endif  // HTDP_DESIGN_H_
