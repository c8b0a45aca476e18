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
#include "htdp/cli.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "htdp/audit.h"
#include "htdp/calibrate.h"
#include "htdp/gaussian_moments.h"
#include "htdp/json_io.h"
#include "htdp/laplace_profile.h"
#include "htdp/srs_binary.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

struct PairSource {
  std::string pairs_path;
  std::string extremal_path;
  int unit = -1;
};

struct Options {
  int jobs = 1;
  std::string design_path;
  PairSource pairs;
  double scale = 0.0;
  std::string eps_grid;
  std::string format = "json";
  double eps = 0.0;
  double delta = 0.0;
  // srs
  int population = 0;
  int sample = 0;
  int total_min = 0;
  int total_max = 0;
  std::string query = "eps0";
  std::optional<double> srs_eps;
  std::optional<double> srs_delta;
  // moments
  std::string data_path;
  int moment_unit = 0;
  bool allow_census = false;
  // audit
  int64_t trials = 1'000'000;
  uint64_t seed = 42;
  size_t pair_index = 0;
  std::string direction = "x->xp";
};

absl::StatusOr<Design> LoadDesign(const std::string& path) {
  HTDP_ASSIGN_OR_RETURN(Json j, ReadJsonFile(path));
  return DesignFromJson(j);
}

absl::StatusOr<std::vector<AdjacentPair>> LoadPairs(const Design& design,
                                                    const PairSource& src) {
  if (!src.pairs_path.empty()) {
    HTDP_ASSIGN_OR_RETURN(Json j, ReadJsonFile(src.pairs_path));
    return PairsFromJson(j);
  }
  HTDP_ASSIGN_OR_RETURN(Json j, ReadJsonFile(src.extremal_path));
  HTDP_ASSIGN_OR_RETURN(DataBounds bounds, BoundsFromJson(j));
  if (src.unit >= 0) return ExtremalPairs(design, bounds, src.unit);
  return ExtremalPairsAllUnits(design, bounds);
}

absl::Status RunProfile(const Options& o, std::ostream& out) {
  HTDP_ASSIGN_OR_RETURN(std::vector<double> grid, ParseEpsGrid(o.eps_grid));
  HTDP_ASSIGN_OR_RETURN(Design design, LoadDesign(o.design_path));
  HTDP_ASSIGN_OR_RETURN(std::vector<AdjacentPair> pairs,
                        LoadPairs(design, o.pairs));
  HTDP_ASSIGN_OR_RETURN(PrivacyProfile profile,
                        ComputeProfile(design, pairs, o.scale, grid, o.jobs));
  if (o.format == "csv") {
    out << ProfileToCsv(profile);
  } else {
    out << ProfileToJson(profile).dump() << '\n';
  }
  return absl::OkStatus();
}

absl::Status RunCalibrate(const Options& o, std::ostream& out) {
  HTDP_ASSIGN_OR_RETURN(Design design, LoadDesign(o.design_path));
  HTDP_ASSIGN_OR_RETURN(std::vector<AdjacentPair> pairs,
                        LoadPairs(design, o.pairs));
  CalibrationOptions options;
  options.jobs = o.jobs;
  HTDP_ASSIGN_OR_RETURN(Calibration c,
                        CalibrateScale(design, pairs, o.eps, o.delta, options));
  out << CalibrationToJson(c).dump() << '\n';
  return absl::OkStatus();
}

absl::Status RunSrs(const Options& o, std::ostream& out) {
  const SrsBinaryConfig cfg{o.population, o.sample, o.total_min, o.total_max};
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  if (o.query == "eps0") {
    if (o.scale != 0.0) {
      return InvalidArgument("UsageError",
                             "query eps0 has a closed form only for b = 0");
    }
    HTDP_ASSIGN_OR_RETURN(double eps, EpsilonSrsNoiselessAtDeltaZero(cfg));
    j["epsilon_at_delta0"] = EpsilonToJson(eps);
  } else if (o.query == "delta") {
    if (!o.srs_eps) return InvalidArgument("UsageError", "query delta needs --eps");
    HTDP_ASSIGN_OR_RETURN(double d,
                          DeltaSrsLaplace(cfg, o.scale, *o.srs_eps, o.jobs));
    j["b"] = o.scale;
    j["eps"] = *o.srs_eps;
    j["delta"] = d;
  } else if (o.query == "epsilon") {
    if (!o.srs_delta) {
      return InvalidArgument("UsageError", "query epsilon needs --delta");
    }
    if (o.scale != 0.0) {
      return InvalidArgument("UsageError", "query epsilon supports b = 0 only");
    }
    HTDP_ASSIGN_OR_RETURN(double eps, EpsilonSrsNoiseless(cfg, *o.srs_delta));
    j["delta"] = *o.srs_delta;
    j["epsilon"] = EpsilonToJson(eps);
  } else {
    return InvalidArgument("UsageError",
                           absl::StrCat("unknown query \"", o.query, "\""));
  }
  out << j.dump() << '\n';
  return absl::OkStatus();
}

absl::Status RunMoments(const Options& o, std::ostream& out) {
  HTDP_ASSIGN_OR_RETURN(Design design, LoadDesign(o.design_path));
  HTDP_ASSIGN_OR_RETURN(Json data, ReadJsonFile(o.data_path));
  HTDP_ASSIGN_OR_RETURN(Dataset x, DatasetFromJson(data));
  MomentsOptions options;
  options.allow_certain_inclusion = o.allow_census;
  HTDP_ASSIGN_OR_RETURN(ConditionalMoments m,
                        ComputeConditionalMoments(design, x, o.moment_unit, options));
  Json j = MomentsToJson(m);
  j["unit"] = o.moment_unit;
  out << j.dump() << '\n';
  return absl::OkStatus();
}

absl::Status RunAudit(const Options& o, std::ostream& out) {
  HTDP_ASSIGN_OR_RETURN(Design design, LoadDesign(o.design_path));
  HTDP_ASSIGN_OR_RETURN(std::vector<AdjacentPair> pairs,
                        LoadPairs(design, o.pairs));
  if (o.pair_index >= pairs.size()) {
    return InvalidArgument("UsageError",
                           absl::StrCat("--pair-index ", o.pair_index,
                                        " but only ", pairs.size(), " pairs"));
  }
  AuditOptions options;
  options.trials = o.trials;
  options.seed = o.seed;
  options.jobs = o.jobs;
  options.direction =
      o.direction == "xp->x" ? Direction::kBackward : Direction::kForward;
  HTDP_ASSIGN_OR_RETURN(AuditResult r, McDelta(design, pairs[o.pair_index],
                                                o.scale, o.eps, options));
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["delta_hat"] = r.delta_hat;
  j["se"] = r.std_err;
  j["trials"] = o.trials;
  j["seed"] = o.seed;
  out << j.dump() << '\n';
  return absl::OkStatus();
}

void PrintError(std::ostream& err, absl::string_view kind,
                absl::string_view message) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << '\n';
}

void AddPairSource(CLI::App* cmd, Options& o) {
  auto* pairs = cmd->add_option("--pairs", o.pairs.pairs_path,
                                "Adjacent-pair JSON file");
  auto* extremal = cmd->add_option(
      "--extremal", o.pairs.extremal_path,
      "Bounds JSON file; generate extremal pairs instead of reading them");
  pairs->excludes(extremal);
  cmd->add_option("--unit", o.pairs.unit,
                  "With --extremal: only pairs differing at this unit");
  cmd->callback([pairs, extremal] {
    if (pairs->count() + extremal->count() == 0) {
      throw CLI::RequiredError("--pairs or --extremal");
    }
  });
}

}  // namespace

absl::StatusOr<std::vector<double>> ParseEpsGrid(const std::string& spec) {
  auto bad = [&spec](absl::string_view why) {
    return InvalidArgument("InvalidGrid",
                           absl::StrCat("\"", spec, "\": ", why));
  };
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts = absl::StrSplit(spec, ':');
    double lo, hi, step;
    if (parts.size() != 3 || !absl::SimpleAtod(parts[0], &lo) ||
        !absl::SimpleAtod(parts[1], &hi) || !absl::SimpleAtod(parts[2], &step)) {
      return bad("expected a:b:step");
    }
    if (!(step > 0.0) || !(hi >= lo)) return bad("need step > 0 and b >= a");
    const double stop = hi + step / 2.0;
    for (int64_t k = 0;; ++k) {
      const double v = lo + static_cast<double>(k) * step;
      if (!(v < stop)) break;
      if (k > 10'000'000) return bad("too many grid points");
      grid.push_back(v);
    }
  } else {
    for (absl::string_view piece : absl::StrSplit(spec, ',')) {
      double v;
      if (!absl::SimpleAtod(piece, &v)) return bad("expected numbers");
      grid.push_back(v);
    }
  }
  if (grid.empty()) return bad("empty grid");
  if (!(grid.front() >= 0.0)) return bad("epsilon must be >= 0");
  if (!std::is_sorted(grid.begin(), grid.end())) return bad("not sorted");
  return grid;
}

int RunCli(std::span<const std::string> args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Differential-privacy accounting for Horvitz-Thompson totals",
               "htdp"};
  app.require_subcommand(1);

  auto* profile = app.add_subcommand("profile", "delta(eps) over adjacent pairs");
  profile->add_option("--design", o.design_path, "Design JSON file")->required();
  AddPairSource(profile, o);
  profile->add_option("--b", o.scale, "Laplace scale (0: no noise)");
  profile->add_option("--eps-grid", o.eps_grid, "a:b:step or comma list")
      ->required();
  profile->add_option("--format", o.format)
      ->check(CLI::IsMember({"json", "csv"}));
  profile->add_option("--jobs", o.jobs, "Worker threads; output does not depend on it")
      ->check(CLI::PositiveNumber);

  auto* calibrate =
      app.add_subcommand("calibrate", "Smallest Laplace scale for (eps, delta)");
  calibrate->add_option("--design", o.design_path)->required();
  AddPairSource(calibrate, o);
  calibrate->add_option("--eps", o.eps)->required();
  calibrate->add_option("--delta", o.delta)->required();
  calibrate->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  auto* srs = app.add_subcommand("srs", "Closed forms for SRS on binary data");
  srs->add_option("--N", o.population)->required();
  srs->add_option("--n", o.sample)->required();
  srs->add_option("--mt", o.total_min)->required();
  srs->add_option("--Mt", o.total_max)->required();
  srs->add_option("--query", o.query)
      ->check(CLI::IsMember({"eps0", "delta", "epsilon"}));
  srs->add_option("--eps", o.srs_eps);
  srs->add_option("--delta", o.srs_delta);
  srs->add_option("--b", o.scale, "Laplace scale for --query delta");
  srs->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  auto* moments = app.add_subcommand(
      "moments", "Conditional moments given selection of a unit");
  moments->add_option("--design", o.design_path)->required();
  moments->add_option("--data", o.data_path)->required();
  moments->add_option("--unit", o.moment_unit)->required();
  moments->add_flag("--allow-census", o.allow_census,
                    "Accept units included with probability one");

  auto* audit = app.add_subcommand("audit", "Monte-Carlo estimate of delta");
  audit->add_option("--design", o.design_path)->required();
  AddPairSource(audit, o);
  audit->add_option("--pair-index", o.pair_index);
  audit->add_option("--dir", o.direction)->check(CLI::IsMember({"x->xp", "xp->x"}));
  audit->add_option("--b", o.scale);
  audit->add_option("--eps", o.eps)->required();
  audit->add_option("--trials", o.trials);
  audit->add_option("--seed", o.seed);
  audit->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    const bool no_command = app.get_subcommands().empty();
    PrintError(err, no_command ? "UnknownSubcommand" : "UsageError", e.what());
    return 2;
  }

  absl::Status status;
  if (profile->parsed()) {
    status = RunProfile(o, out);
  } else if (calibrate->parsed()) {
    status = RunCalibrate(o, out);
  } else if (srs->parsed()) {
    status = RunSrs(o, out);
  } else if (moments->parsed()) {
    status = RunMoments(o, out);
  } else {
    status = RunAudit(o, out);
  }
  if (status.ok()) return 0;
  PrintError(err, ErrorKind(status), status.message());
  const bool user_error = status.code() == absl::StatusCode::kInvalidArgument ||
                          status.code() == absl::StatusCode::kNotFound ||
                          status.code() == absl::StatusCode::kOutOfRange;
  return user_error ? 2 : 1;
}

}  // namespace htdp
