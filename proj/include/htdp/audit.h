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

#ifndef HTDP_AUDIT_H_
#define HTDP_AUDIT_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "htdp/design.h"
#include "htdp/estimator.h"
#include "htdp/laplace_profile.h"

namespace htdp {

struct AuditOptions {
  int64_t trials = 1'000'000;
  uint64_t seed = 42;
  int jobs = 1;
  Direction direction = Direction::kForward;
};

struct AuditResult {
  double delta_hat = 0.0;
  double std_err = 0.0;
};

// Monte-Carlo estimate of delta(eps, x, x') for HT + b * Laplace(0, 1).
// Draws S ~ design and W ~ Laplace under X = x and averages
// (1 - e^eps f_x'(Z) / f_x(Z))_+, whose expectation is the exact delta.
//
// Trials are split into fixed-size blocks, each driven by its own
// mt19937_64 stream seeded from (seed, block index) through SplitMix64, and
// block sums are reduced in block order: the result depends only on the
// seed, never on `jobs`.
// Errors: InvalidTrials (< 1e4), InvalidScale, InvalidEpsilon.
absl::StatusOr<AuditResult> McDelta(const Design& design,
                                    const AdjacentPair& pair, double scale,
                                    double eps,
                                    const AuditOptions& options = {});

// Inverse-CDF Laplace(0, 1) draw from u in (0, 1).
double LaplaceFromUniform(double u);

}  // namespace htdp

#endif  // HTDP_AUDIT_H_
