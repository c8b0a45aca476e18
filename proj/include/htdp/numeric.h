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

#ifndef HTDP_NUMERIC_H_
#define HTDP_NUMERIC_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace htdp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void Add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double Value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// log(sum_k exp(terms[k])), -inf for an empty span.
inline double LogSumExp(std::span<const double> terms) {
  double hi = -kInfinity;
  for (double t : terms) hi = std::max(hi, t);
  if (!std::isfinite(hi)) return hi;
  CompensatedSum acc;
  for (double t : terms) acc.Add(std::exp(t - hi));
  return hi + std::log(acc.Value());
}

// Relative tolerance used to coalesce estimator values that should be equal.
inline constexpr double kMergeRelTolerance = 1e-9;

inline bool NearlyEqualValues(double a, double b) {
  return std::abs(a - b) <=
         kMergeRelTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace htdp

#endif  // HTDP_NUMERIC_H_
