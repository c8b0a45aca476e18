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
#include "htdp/audit.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "absl/strings/str_cat.h"
#include "htdp/numeric.h"
#include "htdp/parallel.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

constexpr int64_t kMinTrials = 10'000;
constexpr int64_t kBlockSize = 1 << 16;

uint64_t SplitMix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in the open interval (0, 1) from the top 53 bits.
double OpenUniform(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

// log of a Laplace mixture density at z, up to the common -log(2b) term.
double LogKernelSum(std::span<const Atom> atoms,
                    std::span<const double> log_mass, double scale, double z) {
  double hi = -kInfinity;
  for (size_t k = 0; k < atoms.size(); ++k) {
    hi = std::max(hi, log_mass[k] - std::abs(z - atoms[k].value) / scale);
  }
  double sum = 0.0;
  for (size_t k = 0; k < atoms.size(); ++k) {
    sum += std::exp(log_mass[k] - std::abs(z - atoms[k].value) / scale - hi);
  }
  return hi + std::log(sum);
}

std::vector<double> LogMasses(const AtomicDistribution& dist) {
  std::vector<double> out;
  for (const Atom& a : dist.atoms()) out.push_back(std::log(a.mass));
  return out;
}

struct BlockSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

}  // namespace

double LaplaceFromUniform(double u) {
  const double centered = u - 0.5;
  return -std::copysign(1.0, centered) * std::log1p(-2.0 * std::abs(centered));
}

absl::StatusOr<AuditResult> McDelta(const Design& design,
                                    const AdjacentPair& pair, double scale,
                                    double eps, const AuditOptions& options) {
  if (options.trials < kMinTrials) {
    return InvalidArgument("InvalidTrials",
                           absl::StrCat("need at least ", kMinTrials,
                                        " trials, got ", options.trials));
  }
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    return InvalidArgument("InvalidScale", absl::StrCat("scale b = ", scale));
  }
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    return InvalidArgument("InvalidEpsilon", absl::StrCat("epsilon ", eps));
  }
  const bool forward = options.direction == Direction::kForward;
  const Dataset& from = forward ? pair.x : pair.x_prime;
  const Dataset& to = forward ? pair.x_prime : pair.x;

  HTDP_ASSIGN_OR_RETURN(InclusionProbs pi, InclusionProbabilities(design, 1));
  HTDP_ASSIGN_OR_RETURN(std::vector<double> ht, HtValues(design, from, pi.first));
  HTDP_ASSIGN_OR_RETURN(AtomicDistribution f_from,
                        AtomDistribution(design, from, pi.first));
  HTDP_ASSIGN_OR_RETURN(AtomicDistribution f_to,
                        AtomDistribution(design, to, pi.first));
  const std::vector<double> log_from = LogMasses(f_from);
  const std::vector<double> log_to = LogMasses(f_to);

  std::vector<double> cdf;
  cdf.reserve(design.support_size());
  CompensatedSum running;
  for (const WeightedSample& ws : design.support()) {
    running.Add(ws.prob);
    cdf.push_back(running.Value());
  }
  const double cdf_total = cdf.back();
  const double factor = std::exp(eps);

  auto term = [&](double z) {
    double ratio;
    if (scale == 0.0) {
      const double denom = f_from.MassAt(z);
      const double numer = f_to.MassAt(z);
      ratio = numer == 0.0 ? 0.0 : factor * numer / denom;
    } else {
      ratio = std::exp(eps + LogKernelSum(f_to.atoms(), log_to, scale, z) -
                       LogKernelSum(f_from.atoms(), log_from, scale, z));
    }
    return std::max(0.0, 1.0 - ratio);
  };

  const int64_t blocks = (options.trials + kBlockSize - 1) / kBlockSize;
  std::vector<BlockSums> partial(blocks);
  ParallelFor(static_cast<size_t>(blocks), options.jobs, [&](size_t block) {
    std::mt19937_64 gen(SplitMix64(options.seed ^ SplitMix64(block)));
    const int64_t begin = static_cast<int64_t>(block) * kBlockSize;
    const int64_t end = std::min(options.trials, begin + kBlockSize);
    BlockSums sums;
    for (int64_t t = begin; t < end; ++t) {
      const double u = OpenUniform(gen) * cdf_total;
      const size_t s = std::min<size_t>(
          std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin(),
          cdf.size() - 1);
      double z = ht[s];
      if (scale > 0.0) z += scale * LaplaceFromUniform(OpenUniform(gen));
      const double v = term(z);
      sums.sum += v;
      sums.sum_sq += v * v;
    }
    partial[block] = sums;
  });

  CompensatedSum sum, sum_sq;
  for (const BlockSums& b : partial) {
    sum.Add(b.sum);
    sum_sq.Add(b.sum_sq);
  }
  const double n = static_cast<double>(options.trials);
  const double mean = sum.Value() / n;
  const double var = std::max(0.0, (sum_sq.Value() / n - mean * mean)) * n / (n - 1.0);
  return AuditResult{mean, std::sqrt(var / n)};
}

}  // namespace htdp
