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
#include "htdp/design.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "htdp/numeric.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

bool CanonicalLess(const WeightedSample& a, const WeightedSample& b) {
  if (a.units.size() != b.units.size()) return a.units.size() < b.units.size();
  return a.units < b.units;
}

// C(n, k) if it does not exceed `cap`, otherwise cap + 1.
uint64_t BinomialCapped(int n, int k, uint64_t cap) {
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (int j = 1; j <= k; ++j) {
    c = c * static_cast<unsigned>(n - k + j) / static_cast<unsigned>(j);
    if (c > cap) return cap + 1;
  }
  return static_cast<uint64_t>(c);
}

}  // namespace

absl::StatusOr<Design> MakeExplicitDesign(std::vector<WeightedSample> samples,
                                          std::optional<int> population_size) {
  if (samples.empty()) {
    return InvalidArgument("EmptySupport", "design has no samples");
  }
  int max_unit = -1;
  CompensatedSum total;
  for (WeightedSample& ws : samples) {
    std::sort(ws.units.begin(), ws.units.end());
    ws.units.erase(std::unique(ws.units.begin(), ws.units.end()),
                   ws.units.end());
    if (!ws.units.empty()) {
      if (ws.units.front() < 0) {
        return InvalidArgument("InvalidUnit",
                               absl::StrCat("negative unit id ", ws.units.front()));
      }
      max_unit = std::max(max_unit, ws.units.back());
    }
    if (!(ws.prob >= 0.0) || !std::isfinite(ws.prob)) {
      return InvalidArgument("NegativeProbability",
                             absl::StrCat("sample probability ", ws.prob));
    }
    total.Add(ws.prob);
  }
  const int n = population_size.value_or(max_unit + 1);
  if (n <= 0) {
    return InvalidArgument("InvalidUnit", "population size must be positive");
  }
  if (max_unit >= n) {
    return InvalidArgument(
        "InvalidUnit",
        absl::StrCat("unit id ", max_unit, " outside population of size ", n));
  }
  const double sum = total.Value();
  if (std::abs(sum - 1.0) > kDesignSumTolerance) {
    return InvalidArgument("ProbabilitiesDoNotSumToOne",
                           absl::StrCat("probabilities sum to ", sum));
  }

  std::erase_if(samples, [](const WeightedSample& ws) { return ws.prob == 0.0; });
  std::sort(samples.begin(), samples.end(), CanonicalLess);
  for (size_t k = 1; k < samples.size(); ++k) {
    if (samples[k].units == samples[k - 1].units) {
      return InvalidArgument("DuplicateSample",
                             absl::StrCat("sample listed twice (size ",
                                          samples[k].units.size(), ")"));
    }
  }
  // Renormalize only when needed so that re-parsing a serialized design
  // reproduces its probabilities bit for bit.
  if (std::abs(sum - 1.0) > kDesignNormalizedTolerance) {
    for (WeightedSample& ws : samples) ws.prob /= sum;
  }

  Design design;
  design.population_size_ = n;
  design.support_ = std::move(samples);
  return design;
}

absl::StatusOr<Design> MakeSrsDesign(int population_size, int sample_size,
                                     uint64_t enumeration_cap) {
  if (population_size <= 0 || sample_size < 0 ||
      sample_size > population_size) {
    return InvalidArgument(
        "InvalidDesign", absl::StrCat("SRS needs 0 <= n <= N with N > 0, got N=",
                                      population_size, " n=", sample_size));
  }
  const uint64_t count =
      BinomialCapped(population_size, sample_size, enumeration_cap);
  if (count > enumeration_cap) {
    return InvalidArgument(
        "EnumerationTooLarge",
        absl::StrCat("C(", population_size, ", ", sample_size,
                     ") exceeds the enumeration cap of ", enumeration_cap));
  }

  Design design;
  design.population_size_ = population_size;
  design.srs_ = SrsParams{population_size, sample_size};
  design.support_.reserve(count);
  const double prob = 1.0 / static_cast<double>(count);

  // Lexicographic enumeration of k-combinations, which is already canonical.
  Sample current(sample_size);
  for (int j = 0; j < sample_size; ++j) current[j] = j;
  while (true) {
    design.support_.push_back({current, prob});
    int pos = sample_size - 1;
    while (pos >= 0 && current[pos] == population_size - sample_size + pos) {
      --pos;
    }
    if (pos < 0) break;
    ++current[pos];
    for (int j = pos + 1; j < sample_size; ++j) current[j] = current[j - 1] + 1;
  }
  return design;
}

absl::StatusOr<InclusionProbs> InclusionProbabilities(const Design& design,
                                                      int order) {
  if (order < 1 || order > 3) {
    return InvalidArgument("InvalidOrder",
                           absl::StrCat("inclusion order must be 1..3, got ", order));
  }
  const int n = design.population_size();
  std::vector<CompensatedSum> first(n);
  std::vector<CompensatedSum> second(order >= 2 ? size_t(n) * n : 0);
  std::vector<CompensatedSum> third(order >= 3 ? size_t(n) * n * n : 0);

  for (const WeightedSample& ws : design.support()) {
    const Sample& s = ws.units;
    for (int i : s) first[i].Add(ws.prob);
    if (order < 2) continue;
    for (int i : s) {
      for (int j : s) second[size_t(i) * n + j].Add(ws.prob);
    }
    if (order < 3) continue;
    for (int i : s) {
      for (int j : s) {
        for (int l : s) third[(size_t(i) * n + j) * n + l].Add(ws.prob);
      }
    }
  }

  InclusionProbs probs;
  probs.first.resize(n);
  for (int i = 0; i < n; ++i) probs.first[i] = first[i].Value();
  if (order >= 2) {
    probs.second = SymmetricMatrix(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        probs.second.at(i, j) = second[size_t(i) * n + j].Value();
      }
    }
  }
  if (order >= 3) {
    probs.third.resize(third.size());
    for (size_t k = 0; k < third.size(); ++k) probs.third[k] = third[k].Value();
  }
  return probs;
}

SymmetricMatrix ThirdOrderSlice(const Design& design, int unit) {
  const int n = design.population_size();
  std::vector<CompensatedSum> acc(size_t(n) * n);
  for (const WeightedSample& ws : design.support()) {
    const Sample& s = ws.units;
    if (!std::binary_search(s.begin(), s.end(), unit)) continue;
    for (int j : s) {
      for (int l : s) acc[size_t(j) * n + l].Add(ws.prob);
    }
  }
  SymmetricMatrix slice(n);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) slice.at(j, l) = acc[size_t(j) * n + l].Value();
  }
  return slice;
}

}  // namespace htdp
