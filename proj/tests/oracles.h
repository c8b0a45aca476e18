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

// Independent reference computations used only by the tests. None of these
// call into the code paths they check.

#ifndef HTDP_TESTS_ORACLES_H_
#define HTDP_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "htdp/design.h"
#include "htdp/estimator.h"

namespace htdp::testing {

using PointMasses = std::vector<std::pair<double, double>>;  // (value, mass)

inline double LaplaceMixturePdf(const PointMasses& atoms, double b, double z) {
  double f = 0.0;
  for (const auto& [v, m] : atoms) f += m * std::exp(-std::abs(z - v) / b);
  return f / (2.0 * b);
}

inline double AdaptiveSimpsonStep(const std::function<double(double)>& f,
                                  double a, double b, double fa, double fm,
                                  double fb, double whole, double tol,
                                  int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
    return left + right + diff / 15.0;
  }
  return AdaptiveSimpsonStep(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         AdaptiveSimpsonStep(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double AdaptiveSimpson(const std::function<double(double)>& f, double a,
                              double b, double tol, int max_depth = 40) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return AdaptiveSimpsonStep(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Integral of (f_x - e^eps f_x')_+ by adaptive Simpson on
// [min - 40b, max + 40b], split at every atom, plus the two outer tails in
// closed form (beyond every atom each density is a single exponential).
inline double QuadratureDelta(const PointMasses& x, const PointMasses& xp,
                              double b, double eps) {
  const double factor = std::exp(eps);
  std::vector<double> cuts;
  for (const auto& [v, m] : x) cuts.push_back(v);
  for (const auto& [v, m] : xp) cuts.push_back(v);
  std::sort(cuts.begin(), cuts.end());
  const double lo = cuts.front() - 40.0 * b;
  const double hi = cuts.back() + 40.0 * b;
  cuts.insert(cuts.begin(), lo);
  cuts.push_back(hi);
  auto integrand = [&](double z) {
    return std::max(0.0, LaplaceMixturePdf(x, b, z) -
                             factor * LaplaceMixturePdf(xp, b, z));
  };
  double total = 0.0;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (cuts[k + 1] - cuts[k] <= 0.0) continue;
    // Subdivide long pieces so Simpson sees the decay.
    const int pieces = std::max(1, static_cast<int>((cuts[k + 1] - cuts[k]) / b));
    const double h = (cuts[k + 1] - cuts[k]) / pieces;
    for (int p = 0; p < pieces; ++p) {
      total += AdaptiveSimpson(integrand, cuts[k] + p * h, cuts[k] + (p + 1) * h,
                               1e-14);
    }
  }
  double left_x = 0.0, left_xp = 0.0, right_x = 0.0, right_xp = 0.0;
  for (const auto& [v, m] : x) {
    left_x += m * std::exp((lo - v) / b);
    right_x += m * std::exp((v - hi) / b);
  }
  for (const auto& [v, m] : xp) {
    left_xp += m * std::exp((lo - v) / b);
    right_xp += m * std::exp((v - hi) / b);
  }
  total += 0.5 * std::max(0.0, left_x - factor * left_xp);
  total += 0.5 * std::max(0.0, right_x - factor * right_xp);
  return total;
}

// sum over values of (f_x - e^eps f_x')_+ for discrete laws keyed exactly.
inline double DiscreteDeltaOracle(const std::map<long long, double>& x,
                                  const std::map<long long, double>& xp,
                                  double eps) {
  double total = 0.0;
  for (const auto& [v, m] : x) {
    auto it = xp.find(v);
    const double other = it == xp.end() ? 0.0 : it->second;
    total += std::max(0.0, m - std::exp(eps) * other);
  }
  return total;
}

// Law of the HT total by direct enumeration, values rounded to 1e-9 so that
// float noise does not split atoms.
inline std::map<long long, double> EnumeratedLaw(const Design& design,
                                                 const std::vector<double>& x) {
  const int n = design.population_size();
  std::vector<double> pi(n, 0.0);
  for (const WeightedSample& ws : design.support()) {
    for (int i : ws.units) pi[i] += ws.prob;
  }
  std::map<long long, double> law;
  for (const WeightedSample& ws : design.support()) {
    double t = 0.0;
    for (int i : ws.units) t += x[i] / pi[i];
    law[std::llround(t * 1e9)] += ws.prob;
  }
  return law;
}

// Conditional mean and variance of the HT total given i in S (or not), by
// enumerating the support.
struct EnumeratedConditional {
  double mean_in = 0.0, var_in = 0.0, mean_out = 0.0, var_out = 0.0;
  double prob_in = 0.0;
};

inline EnumeratedConditional EnumerateConditional(const Design& design,
                                                  const std::vector<double>& x,
                                                  int unit) {
  const int n = design.population_size();
  std::vector<double> pi(n, 0.0);
  for (const WeightedSample& ws : design.support()) {
    for (int i : ws.units) pi[i] += ws.prob;
  }
  EnumeratedConditional out;
  double p_out = 0.0, s_in = 0.0, s_out = 0.0, q_in = 0.0, q_out = 0.0;
  for (const WeightedSample& ws : design.support()) {
    double t = 0.0;
    bool has = false;
    for (int i : ws.units) {
      t += x[i] / pi[i];
      has |= i == unit;
    }
    if (has) {
      out.prob_in += ws.prob;
      s_in += ws.prob * t;
      q_in += ws.prob * t * t;
    } else {
      p_out += ws.prob;
      s_out += ws.prob * t;
      q_out += ws.prob * t * t;
    }
  }
  out.mean_in = s_in / out.prob_in;
  out.var_in = q_in / out.prob_in - out.mean_in * out.mean_in;
  if (p_out > 0.0) {
    out.mean_out = s_out / p_out;
    out.var_out = q_out / p_out - out.mean_out * out.mean_out;
  }
  return out;
}

// Random explicit design over `n` units with `support` distinct samples.
inline Design RandomDesign(std::mt19937_64& gen, int n, int support,
                           bool allow_empty = true) {
  std::uniform_int_distribution<uint64_t> mask_dist(allow_empty ? 0 : 1,
                                                    (uint64_t{1} << n) - 1);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::map<uint64_t, double> chosen;
  while (static_cast<int>(chosen.size()) <
         std::min<int>(support, (1 << n) - (allow_empty ? 0 : 1))) {
    chosen.emplace(mask_dist(gen), weight(gen));
  }
  double total = 0.0;
  for (const auto& [m, w] : chosen) total += w;
  std::vector<WeightedSample> samples;
  for (const auto& [mask, w] : chosen) {
    WeightedSample ws;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) ws.units.push_back(i);
    }
    ws.prob = w / total;
    samples.push_back(std::move(ws));
  }
  return *MakeExplicitDesign(std::move(samples), n);
}

}  // namespace htdp::testing

#endif  // HTDP_TESTS_ORACLES_H_
