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
#include "htdp/gaussian_moments.h"

#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

#include "absl/strings/str_cat.h"
#include "htdp/numeric.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

constexpr double kCertainInclusion = 1.0 - 1e-12;
constexpr double kVarianceFloor = 1e-10;

absl::StatusOr<double> ClampVariance(double var, double magnitude) {
  if (var >= 0.0) return var;
  if (var >= -kVarianceFloor * std::max(1.0, magnitude)) return 0.0;
  return MakeError(absl::StatusCode::kInternal, "NegativeVariance",
                   absl::StrCat("conditional variance ", var));
}

}  // namespace

absl::StatusOr<std::unique_ptr<ConditionalMomentsCalculator>>
ConditionalMomentsCalculator::Create(const Design& design) {
  HTDP_ASSIGN_OR_RETURN(InclusionProbs probs, InclusionProbabilities(design, 2));
  return std::unique_ptr<ConditionalMomentsCalculator>(
      new ConditionalMomentsCalculator(design, std::move(probs)));
}

std::shared_ptr<const SymmetricMatrix> ConditionalMomentsCalculator::Slice(
    int unit) const {
  {
    std::shared_lock lock(mu_);
    auto it = slices_.find(unit);
    if (it != slices_.end()) return it->second;
  }
  auto slice =
      std::make_shared<const SymmetricMatrix>(ThirdOrderSlice(design_, unit));
  std::unique_lock lock(mu_);
  return slices_.try_emplace(unit, std::move(slice)).first->second;
}

absl::StatusOr<ConditionalMoments> ConditionalMomentsCalculator::Compute(
    const Dataset& x, int unit, const MomentsOptions& options) const {
  const int n = design_.population_size();
  if (x.size() != n) {
    return InvalidArgument("SizeMismatch",
                           absl::StrCat("dataset of length ", x.size(),
                                        " for population of size ", n));
  }
  if (unit < 0 || unit >= n) {
    return InvalidArgument("InvalidUnit", absl::StrCat("unit ", unit));
  }
  const double pi_i = probs_.first[unit];
  const bool certain = pi_i > kCertainInclusion;
  if (!(pi_i > 0.0) || (certain && !options.allow_certain_inclusion)) {
    return InvalidArgument("DegenerateInclusion",
                           absl::StrCat("pi_", unit, " = ", pi_i));
  }

  // Units never selected contribute nothing to the estimator.
  std::vector<int> others;
  std::vector<double> weight;
  std::vector<double> cond_in, cond_out;
  for (int j = 0; j < n; ++j) {
    const double pi_j = probs_.first[j];
    if (j == unit || !(pi_j > 0.0)) continue;
    const double pi_ij = probs_.second(unit, j);
    others.push_back(j);
    weight.push_back(x[j] / pi_j);
    cond_in.push_back(pi_ij / pi_i);
    cond_out.push_back(certain ? 0.0 : (pi_j - pi_ij) / (1.0 - pi_i));
  }
  const std::shared_ptr<const SymmetricMatrix> triple = Slice(unit);

  CompensatedSum mean_in, mean_out, var_in, var_out;
  double magnitude = 0.0;
  for (size_t a = 0; a < others.size(); ++a) {
    mean_in.Add(weight[a] * cond_in[a]);
    mean_out.Add(weight[a] * cond_out[a]);
    for (size_t c = 0; c < others.size(); ++c) {
      const int j = others[a];
      const int l = others[c];
      const double ww = weight[a] * weight[c];
      magnitude += std::abs(ww);
      const double joint_in = (*triple)(j, l) / pi_i;
      var_in.Add(ww * (joint_in - cond_in[a] * cond_in[c]));
      if (!certain) {
        const double joint_out =
            (probs_.second(j, l) - (*triple)(j, l)) / (1.0 - pi_i);
        var_out.Add(ww * (joint_out - cond_out[a] * cond_out[c]));
      }
    }
  }

  ConditionalMoments m;
  m.t_minus_i_given_i = mean_in.Value();
  HTDP_ASSIGN_OR_RETURN(m.var_given_i, ClampVariance(var_in.Value(), magnitude));
  if (certain) {
    m.t_minus_i_given_not_i = std::numeric_limits<double>::quiet_NaN();
    m.var_given_not_i = std::numeric_limits<double>::quiet_NaN();
  } else {
    m.t_minus_i_given_not_i = mean_out.Value();
    HTDP_ASSIGN_OR_RETURN(m.var_given_not_i,
                          ClampVariance(var_out.Value(), magnitude));
  }
  return m;
}

absl::StatusOr<ConditionalMoments> ComputeConditionalMoments(
    const Design& design, const Dataset& x, int unit,
    const MomentsOptions& options) {
  HTDP_ASSIGN_OR_RETURN(auto calculator,
                        ConditionalMomentsCalculator::Create(design));
  return calculator->Compute(x, unit, options);
}

}  // namespace htdp
