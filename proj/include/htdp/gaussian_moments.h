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

#ifndef HTDP_GAUSSIAN_MOMENTS_H_
#define HTDP_GAUSSIAN_MOMENTS_H_

#include <map>
#include <memory>
#include <shared_mutex>

#include "absl/status/statusor.h"
#include "htdp/design.h"
#include "htdp/estimator.h"

namespace htdp {

// Mean and variance of the HT total's part over units other than i,
// conditional on i being selected or not. None of them depends on x_i; the
// full conditional mean given selection is t_minus_i_given_i + x_i / pi_i.
//
// When pi_i = 1 is accepted (census fallback) the "not selected" event has
// probability zero and the two corresponding fields are NaN.
struct ConditionalMoments {
  double t_minus_i_given_i = 0.0;
  double t_minus_i_given_not_i = 0.0;
  double var_given_i = 0.0;
  double var_given_not_i = 0.0;
};

struct MomentsOptions {
  bool allow_certain_inclusion = false;
};

// Holds inclusion probabilities of a design and caches third-order slices
// per unit. Concurrent Compute() calls are safe.
class ConditionalMomentsCalculator {
 public:
  static absl::StatusOr<std::unique_ptr<ConditionalMomentsCalculator>> Create(
      const Design& design);

  // Errors: SizeMismatch, InvalidUnit, DegenerateInclusion (pi_i = 0, or
  // pi_i = 1 without allow_certain_inclusion).
  absl::StatusOr<ConditionalMoments> Compute(
      const Dataset& x, int unit, const MomentsOptions& options = {}) const;

 private:
  ConditionalMomentsCalculator(const Design& design, InclusionProbs probs)
      : design_(design), probs_(std::move(probs)) {}

  std::shared_ptr<const SymmetricMatrix> Slice(int unit) const;

  const Design& design_;
  InclusionProbs probs_;
  mutable std::shared_mutex mu_;
  mutable std::map<int, std::shared_ptr<const SymmetricMatrix>> slices_;
};

absl::StatusOr<ConditionalMoments> ComputeConditionalMoments(
    const Design& design, const Dataset& x, int unit,
    const MomentsOptions& options = {});

}  // namespace htdp

#endif  // HTDP_GAUSSIAN_MOMENTS_H_
