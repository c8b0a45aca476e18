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

// Acceptance harness. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Tolerances are pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "htdp/audit.h"
#include "htdp/calibrate.h"
#include "htdp/cli.h"
#include "htdp/design.h"
#include "htdp/estimator.h"
#include "htdp/gaussian_moments.h"
#include "htdp/laplace_profile.h"
#include "htdp/srs_binary.h"
#include "oracles.h"

namespace htdp {
namespace {

constexpr double kMaxInclusionSlack = 1e-12;
constexpr double kSrsTolerance = 1e-10;
constexpr double kKnotRelTolerance = 1e-9;
constexpr double kQuadratureTolerance = 1e-8;
constexpr double kMcSigmas = 3.0;
constexpr double kMomentsTolerance = 1e-10;
constexpr double kTotalExpectationTolerance = 1e-9;
constexpr double kInvarianceTolerance = 1e-12;
constexpr double kSandwichFactor = 0.999;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first few failures without stopping the sweep.
class Failures {
 public:
  void Add(const std::string& what) {
    if (count_++ < 3) absl::StrAppend(&first_, first_.empty() ? "" : "; ", what);
  }
  bool empty() const { return count_ == 0; }
  std::string Summary() const {
    return absl::StrCat(count_, " failure(s): ", first_);
  }

 private:
  int count_ = 0;
  std::string first_;
};

template <typename T>
T Must(absl::StatusOr<T> v) {
  if (!v.ok()) {
    std::fprintf(stderr, "unexpected error: %s\n", v.status().ToString().c_str());
    std::abort();
  }
  return *std::move(v);
}

std::vector<double> RandomValues(std::mt19937_64& gen, int n, double lo,
                                 double hi) {
  std::uniform_real_distribution<double> v(lo, hi);
  std::vector<double> x(n);
  for (double& xi : x) xi = v(gen);
  return x;
}

// A random adjacent pair with values in [0, 1] that changes one unit.
AdjacentPair RandomPair(std::mt19937_64& gen, int n) {
  const DataBounds b{0, 1, 0, static_cast<double>(n)};
  std::vector<double> x = RandomValues(gen, n, 0, 1);
  std::vector<double> xp = x;
  const int unit = std::uniform_int_distribution<int>(0, n - 1)(gen);
  xp[unit] = std::uniform_real_distribution<double>(0, 1)(gen);
  return Must(MakeAdjacentPair(Must(MakeDataset(x, b)), Must(MakeDataset(xp, b)),
                               unit));
}

// log f(z) for a Laplace mixture, evaluated directly with a max shift.
double LogPdf(const AtomicDistribution& d, double b, double z) {
  double hi = -std::numeric_limits<double>::infinity();
  for (const Atom& a : d.atoms()) {
    hi = std::max(hi, std::log(a.mass) - std::abs(z - a.value) / b);
  }
  double s = 0.0;
  for (const Atom& a : d.atoms()) {
    s += std::exp(std::log(a.mass) - std::abs(z - a.value) / b - hi);
  }
  return hi + std::log(s) - std::log(2.0 * b);
}

testing::PointMasses Points(const AtomicDistribution& d) {
  testing::PointMasses out;
  for (const Atom& a : d.atoms()) out.emplace_back(a.value, a.mass);
  return out;
}

// 1. delta(0) at b = 0 never exceeds max_i pi_i.
Outcome MaxInclusionBound() {
  Failures failures;
  std::mt19937_64 gen(101);
  std::vector<Design> designs;
  for (int n_pop = 2; n_pop <= 10; ++n_pop) {
    for (int n = 1; n <= n_pop; ++n) {
      auto d = MakeSrsDesign(n_pop, n, 1000);
      if (d.ok()) designs.push_back(*std::move(d));
    }
  }
  const size_t srs_count = designs.size();
  for (int trial = 0; trial < 150; ++trial) {
    const int n_pop = 2 + trial % 9;
    const int max_support = std::min(1000, 1 << n_pop);
    const int support = static_cast<int>(
        std::round(std::exp(std::uniform_real_distribution<double>(
            0, std::log(max_support))(gen))));
    designs.push_back(testing::RandomDesign(gen, n_pop, support));
  }
  double worst_gap = -1.0;
  for (const Design& d : designs) {
    const int n_pop = d.population_size();
    const auto pi = Must(InclusionProbabilities(d, 1));
    const double max_pi = *std::max_element(pi.first.begin(), pi.first.end());
    const auto pairs = Must(AllBinaryAdjacentPairs(n_pop, 0, n_pop));
    const auto prepared = Must(PreparePairs(d, pairs));
    const WorstCase w = Must(WorstCaseDelta(prepared, 0.0, 0.0));
    worst_gap = std::max(worst_gap, w.delta - max_pi);
    if (w.delta > max_pi + kMaxInclusionSlack) {
      failures.Add(absl::StrCat("N=", n_pop, " delta=", w.delta, " max_pi=", max_pi));
    }
  }
  auto srs21 = Must(MakeSrsDesign(2, 1));
  const auto pair21 = Must(AllBinaryAdjacentPairs(2, 0, 2));
  const double attained =
      Must(WorstCaseDelta(Must(PreparePairs(srs21, pair21)), 0.0, 0.0)).delta;
  if (attained != 0.5) failures.Add(absl::StrCat("SRS(2,1) gives ", attained));
  if (!failures.empty()) return {false, failures.Summary()};
  return {true, absl::StrFormat(
                    "%d designs (%d SRS, support <= 1000), max(delta - max pi) = "
                    "%.3g <= %.0e, SRS(2,1) = 0.5 exactly",
                    designs.size(), srs_count, worst_gap, kMaxInclusionSlack)};
}

// 2. SRS closed forms against the generic path on enumerated designs.
Outcome SrsEquivalence() {
  Failures failures;
  const double eps_grid[] = {0.0, 0.3, 1.0, 2.5};
  int configs = 0;
  double max_err = 0.0;
  for (int n_pop = 1; n_pop <= 12; ++n_pop) {
    const auto pairs = Must(AllBinaryAdjacentPairs(n_pop, 0, n_pop));
    for (int n = 1; n <= n_pop; ++n) {
      const Design d = Must(MakeSrsDesign(n_pop, n));
      const auto prepared = Must(PreparePairs(d, pairs));
      // Per pair: lower total, delta per eps (worst orientation), log ratio sup.
      struct PairStats {
        int total;
        double delta[4];
        double eps0;
      };
      std::vector<PairStats> stats;
      stats.reserve(prepared.size());
      for (size_t k = 0; k < prepared.size(); ++k) {
        PairStats s{static_cast<int>(std::lround(pairs[k].x.Total())), {}, 0.0};
        for (int e = 0; e < 4; ++e) {
          s.delta[e] = std::max(
              Must(PairDelta(prepared[k], 0.0, eps_grid[e], Direction::kForward)),
              Must(PairDelta(prepared[k], 0.0, eps_grid[e], Direction::kBackward)));
        }
        const LaplaceMixture mx{prepared[k].x, 0.0}, mxp{prepared[k].x_prime, 0.0};
        s.eps0 = std::max(LogDensityRatioSup(mx, mxp), LogDensityRatioSup(mxp, mx));
        stats.push_back(s);
      }
      for (int mt = 0; mt <= n_pop; ++mt) {
        for (int big = mt + 1; big <= n_pop; ++big) {
          const SrsBinaryConfig cfg{n_pop, n, mt, big};
          ++configs;
          double generic[4] = {0, 0, 0, 0};
          double generic_eps0 = 0.0;
          for (const PairStats& s : stats) {
            if (s.total < mt || s.total + 1 > big) continue;
            for (int e = 0; e < 4; ++e) generic[e] = std::max(generic[e], s.delta[e]);
            generic_eps0 = std::max(generic_eps0, s.eps0);
          }
          for (int e = 0; e < 4; ++e) {
            const double closed = Must(DeltaSrsNoiseless(cfg, eps_grid[e]));
            const double err = std::abs(closed - generic[e]);
            max_err = std::max(max_err, err);
            if (err > kSrsTolerance) {
              failures.Add(absl::StrCat("delta (", n_pop, ",", n, ",", mt, ",",
                                        big, ") eps=", eps_grid[e], ": ",
                                        closed, " vs ", generic[e]));
            }
          }
          const double closed_eps0 = Must(EpsilonSrsNoiselessAtDeltaZero(cfg));
          if (std::isinf(closed_eps0) || std::isinf(generic_eps0)) {
            if (std::isinf(closed_eps0) != std::isinf(generic_eps0)) {
              failures.Add(absl::StrCat("eps0 (", n_pop, ",", n, ",", mt, ",",
                                        big, "): ", closed_eps0, " vs ",
                                        generic_eps0));
            }
          } else {
            const double err = std::abs(closed_eps0 - generic_eps0);
            max_err = std::max(max_err, err);
            if (err > kSrsTolerance) {
              failures.Add(absl::StrCat("eps0 (", n_pop, ",", n, ",", mt, ",",
                                        big, "): ", closed_eps0, " vs ",
                                        generic_eps0));
            }
          }
        }
      }
    }
  }
  const double ln2 = Must(EpsilonSrsNoiselessAtDeltaZero({4, 1, 1, 3}));
  if (std::abs(ln2 - std::log(2.0)) > kSrsTolerance) {
    failures.Add(absl::StrCat("(4,1,1,3) gives ", ln2));
  }
  if (!failures.empty()) return {false, failures.Summary()};
  return {true, absl::StrFormat(
                    "%d configs (N<=12, all n, m_t<M_t), 4 eps each, max err "
                    "%.2e <= %.0e, (4,1,1,3) -> ln 2",
                    configs, max_err, kSrsTolerance)};
}

// 3. The density ratio on a dense grid never beats the knot maximum.
Outcome KnotMaximum() {
  Failures failures;
  std::mt19937_64 gen(303);
  double worst = -1e300;
  for (int trial = 0; trial < 50; ++trial) {
    const int n_pop = 2 + trial % 6;
    const Design d = testing::RandomDesign(gen, n_pop, 2 + trial % 20);
    const std::vector<AdjacentPair> pair = {RandomPair(gen, n_pop)};
    const PreparedPair p = Must(PreparePairs(d, pair))[0];
    const double b =
        std::exp(std::uniform_real_distribution<double>(std::log(0.05), std::log(5.0))(gen));
    const LaplaceMixture mx{p.x, b}, mxp{p.x_prime, b};
    const double lo = std::min(p.x.min_value(), p.x_prime.min_value()) - 10 * b;
    const double hi = std::max(p.x.max_value(), p.x_prime.max_value()) + 10 * b;
    for (int orient = 0; orient < 2; ++orient) {
      const LaplaceMixture& a = orient == 0 ? mx : mxp;
      const LaplaceMixture& c = orient == 0 ? mxp : mx;
      const double knot = LogDensityRatioSup(a, c);
      double grid_sup = -1e300;
      for (int k = 0; k < 10000; ++k) {
        const double z = lo + (hi - lo) * k / 9999.0;
        grid_sup = std::max(grid_sup, LogPdf(a.atoms, b, z) - LogPdf(c.atoms, b, z));
      }
      // Relative excess of the ratio itself: exp(grid - knot) - 1.
      const double excess = std::expm1(grid_sup - knot);
      worst = std::max(worst, excess);
      if (excess > kKnotRelTolerance) {
        failures.Add(absl::StrCat("trial ", trial, " excess ", excess));
      }
    }
  }
  if (!failures.empty()) return {false, failures.Summary()};
  return {true, absl::StrFormat(
                    "50 configs x 2 orientations, 10^4-point grid, max relative "
                    "excess %.2e <= %.0e",
                    worst, kKnotRelTolerance)};
}

// 4. Closed-form piecewise integration against adaptive quadrature.
Outcome QuadratureAgreement() {
  Failures failures;
  std::mt19937_64 gen(404);
  double max_err = 0.0;
  int nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n_pop = 2 + trial % 5;
    const Design d = testing::RandomDesign(gen, n_pop, 2 + trial % 12);
    const std::vector<AdjacentPair> pair = {RandomPair(gen, n_pop)};
    const PreparedPair p = Must(PreparePairs(d, pair))[0];
    // b spans [1e-2, 1e2] evenly in log scale across the trials.
    const double b = std::pow(10.0, -2.0 + 4.0 * trial / 99.0);
    const double eps = std::uniform_real_distribution<double>(0.0, 2.0)(gen);
    const Direction dir = trial % 2 ? Direction::kBackward : Direction::kForward;
    const double analytic = Must(PairDelta(p, b, eps, dir));
    const auto& from = dir == Direction::kForward ? p.x : p.x_prime;
    const auto& to = dir == Direction::kForward ? p.x_prime : p.x;
    const double oracle = testing::QuadratureDelta(Points(from), Points(to), b, eps);
    const double err = std::abs(analytic - oracle);
    max_err = std::max(max_err, err);
    if (analytic > 1e-3) ++nontrivial;
    if (err > kQuadratureTolerance) {
      failures.Add(absl::StrCat("trial ", trial, " b=", b, ": ", analytic, " vs ",
                                oracle));
    }
  }
  if (!failures.empty()) return {false, failures.Summary()};
  return {true, absl::StrFormat(
                    "100 configs (%d with delta > 1e-3), b in [1e-2, 1e2], "
                    "max |closed - quadrature| = %.2e <= %.0e",
                    nontrivial, max_err, kQuadratureTolerance)};
}

// 5. Monte-Carlo estimates agree with the analytic delta.
Outcome MonteCarlo() {
  Failures failures;
  std::mt19937_64 gen(505);
  int reseeds = 0;
  double worst_z = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    Design d = trial < 5 ? Must(MakeSrsDesign(4 + trial, 2))
                         : testing::RandomDesign(gen, 4, 6 + trial);
    const int n_pop = d.population_size();
    const std::vector<AdjacentPair> pair = {RandomPair(gen, n_pop)};
    const PreparedPair p = Must(PreparePairs(d, pair))[0];
    const double b = trial % 5 == 4 ? 0.0 : 0.2 + 0.4 * trial;
    const double eps = 0.1 * trial;
    AuditOptions opts;
    opts.trials = 1'000'000;
    opts.seed = 1000 + trial;
    opts.direction = trial % 2 ? Direction::kBackward : Direction::kForward;
    const double analytic = Must(PairDelta(p, b, eps, opts.direction));
    auto within = [&](const AuditResult& r) {
      return std::abs(r.delta_hat - analytic) <=
             kMcSigmas * r.std_err + 1e-12;
    };
    AuditResult r = Must(McDelta(d, pair[0], b, eps, opts));
    if (!within(r)) {
      ++reseeds;
      opts.seed += 7919;
      r = Must(McDelta(d, pair[0], b, eps, opts));
    }
    if (r.std_err > 0) {
      worst_z = std::max(worst_z, std::abs(r.delta_hat - analytic) / r.std_err);
    }
    if (!within(r)) {
      failures.Add(absl::StrCat("trial ", trial, ": ", r.delta_hat, " +- ",
                                r.std_err, " vs ", analytic));
    }
  }
  if (!failures.empty()) return {false, failures.Summary()};
  return {true, absl::StrFormat(
                    "10 configs x 1e6 trials, max |z| = %.2f <= %.0f, %d reseed(s)",
                    worst_z, kMcSigmas, reseeds)};
}

// 6. Conditional moments against enumeration, total expectation, invariance.
Outcome Moments() {
  Failures failures;
  std::mt19937_64 gen(606);
  std::vector<Design> designs;
  for (int n_pop = 3; n_pop <= 9; ++n_pop) {
    designs.push_back(Must(MakeSrsDesign(n_pop, n_pop / 2)));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const int n_pop = 3 + trial % 12;
    const int support = std::min(10000, std::max(2, (1 << n_pop) / (1 + trial % 3)));
    designs.push_back(testing::RandomDesign(gen, n_pop, support));
  }
  designs.push_back(testing::RandomDesign(gen, 14, 10000));
  size_t largest = 0;
  int checked = 0;
  double max_err = 0.0;
  for (const Design& d : designs) {
    largest = std::max(largest, d.support_size());
    const int n_pop = d.population_size();
    const auto pi = Must(InclusionProbabilities(d, 1));
    const std::vector<double> x = RandomValues(gen, n_pop, -1, 3);
    const DataBounds bounds{-1, 3, -1.0 * n_pop, 3.0 * n_pop};
    const Dataset data = Must(MakeDataset(x, bounds));
    auto calc = Must(ConditionalMomentsCalculator::Create(d));
    double expected_total = 0.0;
    for (int j = 0; j < n_pop; ++j) {
      if (pi.first[j] > 0.0) expected_total += x[j];
    }
    for (int i = 0; i < n_pop; ++i) {
      const double p = pi.first[i];
      if (p <= 0.0 || p > 1.0 - 1e-12) continue;
      ++checked;
      const ConditionalMoments m = Must(calc->Compute(data, i));
      const auto e = testing::EnumerateConditional(d, x, i);
      auto check = [&](double got, double want, const char* what) {
        const double err = std::abs(got - want) / std::max(1.0, std::abs(want));
        max_err = std::max(max_err, err);
        if (err > kMomentsTolerance) {
          failures.Add(absl::StrCat(what, " i=", i, ": ", got, " vs ", want));
        }
      };
      check(m.t_minus_i_given_i, e.mean_in - x[i] / e.prob_in, "t_i");
      check(m.t_minus_i_given_not_i, e.mean_out, "t_not_i");
      check(m.var_given_i, std::max(0.0, e.var_in), "var_i");
      check(m.var_given_not_i, std::max(0.0, e.var_out), "var_not_i");

      const double lhs = p * (x[i] / p + m.t_minus_i_given_i) +
                         (1 - p) * m.t_minus_i_given_not_i;
      if (std::abs(lhs - expected_total) >
          kTotalExpectationTolerance * std::max(1.0, std::abs(expected_total))) {
        failures.Add(absl::StrCat("total expectation i=", i, ": ", lhs, " vs ",
                                  expected_total));
      }

      std::vector<double> moved = x;
      moved[i] = x[i] > 1.0 ? -0.5 : 2.5;
      const ConditionalMoments m2 =
          Must(calc->Compute(Must(MakeDataset(moved, bounds)), i));
      auto same = [](double a, double b) {
        return std::abs(a - b) <= kInvarianceTolerance * std::max(1.0, std::abs(a));
      };
      if (!same(m.t_minus_i_given_i, m2.t_minus_i_given_i) ||
          !same(m.t_minus_i_given_not_i, m2.t_minus_i_given_not_i) ||
          !same(m.var_given_i, m2.var_given_i) ||
          !same(m.var_given_not_i, m2.var_given_not_i)) {
        failures.Add(absl::StrCat("x_i invariance i=", i));
      }
    }
  }
  if (!failures.empty()) return {false, failures.Summary()};
  return {true, absl::StrFormat(
                    "%d (design, unit) cases, support up to %d, max rel err %.2e "
                    "<= %.0e, total expectation <= %.0e, invariance <= %.0e",
                    checked, largest, max_err, kMomentsTolerance,
                    kTotalExpectationTolerance, kInvarianceTolerance)};
}

// 7. Calibrated scales are sandwiched by re-evaluation.
Outcome CalibrationSandwich() {
  Failures failures;
  std::mt19937_64 gen(707);
  const double eps_values[] = {0.1, 0.5, 1.0, std::log(2.0), 2.0};
  const double targets[] = {0.0, 1e-6, 1e-4, 1e-3, 1e-2};
  for (int trial = 0; trial < 20; ++trial) {
    Design d = trial % 2 == 0 ? Must(MakeSrsDesign(4 + trial / 4, 1 + trial % 3))
                              : testing::RandomDesign(gen, 5, 4 + trial, false);
    const int n_pop = d.population_size();
    std::vector<AdjacentPair> pairs;
    if (trial % 3 == 0) {
      pairs = Must(AllBinaryAdjacentPairs(n_pop, 0, n_pop));
    } else {
      pairs = Must(ExtremalPairsAllUnits(d, {0, 1, 0, static_cast<double>(n_pop)}));
    }
    const auto prepared = Must(PreparePairs(d, pairs));
    const double eps = eps_values[trial % 5];
    const double target = targets[(trial / 5 + trial) % 5];
    const Calibration c = Must(CalibrateScale(prepared, eps, target));
    const double at = Must(WorstCaseDelta(prepared, c.scale, eps)).delta;
    const double below =
        Must(WorstCaseDelta(prepared, kSandwichFactor * c.scale, eps)).delta;
    if (!(at <= target && target < below)) {
      failures.Add(absl::StrCat("trial ", trial, " b=", c.scale, ": ", at,
                                " <= ", target, " < ", below));
    }
  }
  if (!failures.empty()) return {false, failures.Summary()};
  return {true, "20 configs, delta(b) <= target < delta(0.999 b) re-evaluated"};
}

// 8. CLI output is byte-identical across worker counts.
Outcome CliDeterminism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "htdp_acceptance";
  fs::create_directories(dir);
  const std::string design = (dir / "design.json").string();
  const std::string bounds = (dir / "bounds.json").string();
  const std::string data = (dir / "data.json").string();
  std::ofstream(design) << R"({"type":"srs","N":8,"n":3})";
  std::ofstream(bounds) << R"({"mx":0,"Mx":1,"mt":0,"Mt":8})";
  std::ofstream(data) << R"({"x":[0,1,1,0,1,0,0,1],"mx":0,"Mx":1,"mt":0,"Mt":8})";
  const std::vector<std::vector<std::string>> commands = {
      {"profile", "--design", design, "--extremal", bounds, "--b", "0.8",
       "--eps-grid", "0:4:0.1"},
      {"profile", "--design", design, "--extremal", bounds, "--b", "0",
       "--eps-grid", "0:2:0.5", "--format", "csv"},
      {"calibrate", "--design", design, "--extremal", bounds, "--eps", "0.7",
       "--delta", "1e-5"},
      {"srs", "--N", "60", "--n", "12", "--mt", "5", "--Mt", "50", "--query",
       "delta", "--eps", "0.3", "--b", "2"},
      {"audit", "--design", design, "--extremal", bounds, "--b", "1.2", "--eps",
       "0.1", "--trials", "300000", "--seed", "9"},
  };
  Failures failures;
  for (const auto& base : commands) {
    std::string reference;
    for (const char* jobs : {"1", "2", "4"}) {
      std::vector<std::string> args = {"htdp"};
      args.insert(args.end(), base.begin(), base.end());
      args.push_back("--jobs");
      args.push_back(jobs);
      std::ostringstream out, err;
      const int code = RunCli(args, out, err);
      if (code != 0) {
        failures.Add(absl::StrCat(base[0], " exited ", code, ": ", err.str()));
        break;
      }
      if (reference.empty()) {
        reference = out.str();
      } else if (out.str() != reference) {
        failures.Add(absl::StrCat(base[0], " differs at --jobs ", jobs));
      }
    }
  }
  std::ostringstream out, err;
  const std::vector<std::string> moments = {"htdp", "moments", "--design", design,
                                            "--data", data, "--unit", "2"};
  if (RunCli(moments, out, err) != 0) failures.Add("moments failed");
  fs::remove_all(dir);
  if (!failures.empty()) return {false, failures.Summary()};
  return {true, "profile (json, csv), calibrate, srs, audit identical at --jobs 1/2/4"};
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace htdp

int main() {
  using htdp::Criterion;
  const Criterion criteria[] = {
      {"1 max-inclusion-bound", 10, htdp::MaxInclusionBound},
      {"2 srs-closed-form-equivalence", 120, htdp::SrsEquivalence},
      {"3 knot-maximum", 60, htdp::KnotMaximum},
      {"4 piecewise-integration", 120, htdp::QuadratureAgreement},
      {"5 monte-carlo-consistency", 180, htdp::MonteCarlo},
      {"6 conditional-moments", 60, htdp::Moments},
      {"7 calibration-sandwich", 120, htdp::CalibrationSandwich},
      {"8 cli-determinism", 1e9, htdp::CliDeterminism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    htdp::Outcome o = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::string timing = absl::StrFormat("%.2fs", secs);
    if (c.budget_seconds < 1e8) {
      absl::StrAppend(&timing, absl::StrFormat(" / budget %.0fs", c.budget_seconds));
      if (secs >= c.budget_seconds) {
        o.pass = false;
        absl::StrAppend(&o.detail, " [over time budget]");
      }
    }
    std::printf("%s  criterion %-32s %s (%s)\n", o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
