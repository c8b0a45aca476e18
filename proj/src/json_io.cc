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
#include "htdp/json_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "htdp/numeric.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

absl::Status Violation(absl::string_view detail) {
  return InvalidArgument("SchemaViolation", detail);
}

absl::StatusOr<const Json*> Field(const Json& j, absl::string_view key) {
  if (!j.is_object()) return Violation("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) return Violation(absl::StrCat("missing field \"", key, "\""));
  return &*it;
}

absl::StatusOr<double> NumberField(const Json& j, absl::string_view key) {
  HTDP_ASSIGN_OR_RETURN(const Json* v, Field(j, key));
  if (!v->is_number()) {
    return Violation(absl::StrCat("field \"", key, "\" must be a number"));
  }
  return v->get<double>();
}

absl::StatusOr<int> IntField(const Json& j, absl::string_view key) {
  HTDP_ASSIGN_OR_RETURN(const Json* v, Field(j, key));
  if (!v->is_number_integer()) {
    return Violation(absl::StrCat("field \"", key, "\" must be an integer"));
  }
  return v->get<int>();
}

absl::StatusOr<std::vector<double>> NumberArray(const Json& j,
                                                absl::string_view what) {
  if (!j.is_array()) return Violation(absl::StrCat(what, " must be an array"));
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number()) {
      return Violation(absl::StrCat(what, " must contain numbers only"));
    }
    out.push_back(v.get<double>());
  }
  return out;
}

absl::StatusOr<Dataset> PairSide(const Json& pair, absl::string_view key) {
  HTDP_ASSIGN_OR_RETURN(const Json* side, Field(pair, key));
  if (side->is_object()) return DatasetFromJson(*side);
  HTDP_ASSIGN_OR_RETURN(std::vector<double> values,
                        NumberArray(*side, absl::StrCat("\"", key, "\"")));
  HTDP_ASSIGN_OR_RETURN(DataBounds bounds, BoundsFromJson(pair));
  return MakeDataset(std::move(values), bounds);
}

absl::StatusOr<AdjacentPair> PairFromJson(const Json& j) {
  HTDP_ASSIGN_OR_RETURN(Dataset x, PairSide(j, "x"));
  HTDP_ASSIGN_OR_RETURN(Dataset xp, PairSide(j, "xp"));
  HTDP_ASSIGN_OR_RETURN(int unit, IntField(j, "i"));
  return MakeAdjacentPair(std::move(x), std::move(xp), unit);
}

Json Versioned() {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  return j;
}

Json NumberOrNull(double v) { return std::isnan(v) ? Json(nullptr) : Json(v); }

}  // namespace

absl::StatusOr<Design> DesignFromJson(const Json& j) {
  HTDP_ASSIGN_OR_RETURN(const Json* type, Field(j, "type"));
  if (*type == "srs") {
    HTDP_ASSIGN_OR_RETURN(int big_n, IntField(j, "N"));
    HTDP_ASSIGN_OR_RETURN(int n, IntField(j, "n"));
    return MakeSrsDesign(big_n, n);
  }
  if (*type != "explicit") {
    return Violation("design \"type\" must be \"explicit\" or \"srs\"");
  }
  HTDP_ASSIGN_OR_RETURN(const Json* samples, Field(j, "samples"));
  if (!samples->is_array()) return Violation("\"samples\" must be an array");
  std::vector<WeightedSample> support;
  support.reserve(samples->size());
  for (const Json& entry : *samples) {
    HTDP_ASSIGN_OR_RETURN(const Json* units, Field(entry, "s"));
    if (!units->is_array()) return Violation("\"s\" must be an array");
    WeightedSample ws;
    for (const Json& u : *units) {
      if (!u.is_number_integer()) {
        return Violation("\"s\" must contain integer unit ids");
      }
      ws.units.push_back(u.get<int>());
    }
    HTDP_ASSIGN_OR_RETURN(ws.prob, NumberField(entry, "p"));
    support.push_back(std::move(ws));
  }
  std::optional<int> population;
  if (j.contains("N")) {
    HTDP_ASSIGN_OR_RETURN(population, IntField(j, "N"));
  }
  return MakeExplicitDesign(std::move(support), population);
}

Json DesignToJson(const Design& design) {
  Json j = Json::object();
  if (const auto& srs = design.srs_params()) {
    j["type"] = "srs";
    j["N"] = srs->population_size;
    j["n"] = srs->sample_size;
    return j;
  }
  j["type"] = "explicit";
  j["N"] = design.population_size();
  Json samples = Json::array();
  for (const WeightedSample& ws : design.support()) {
    samples.push_back({{"s", ws.units}, {"p", ws.prob}});
  }
  j["samples"] = std::move(samples);
  return j;
}

absl::StatusOr<DataBounds> BoundsFromJson(const Json& j) {
  DataBounds b;
  HTDP_ASSIGN_OR_RETURN(b.value_min, NumberField(j, "mx"));
  HTDP_ASSIGN_OR_RETURN(b.value_max, NumberField(j, "Mx"));
  HTDP_ASSIGN_OR_RETURN(b.total_min, NumberField(j, "mt"));
  HTDP_ASSIGN_OR_RETURN(b.total_max, NumberField(j, "Mt"));
  return b;
}

absl::StatusOr<Dataset> DatasetFromJson(const Json& j) {
  HTDP_ASSIGN_OR_RETURN(const Json* x, Field(j, "x"));
  HTDP_ASSIGN_OR_RETURN(std::vector<double> values, NumberArray(*x, "\"x\""));
  HTDP_ASSIGN_OR_RETURN(DataBounds bounds, BoundsFromJson(j));
  return MakeDataset(std::move(values), bounds);
}

Json DatasetToJson(const Dataset& x) {
  const DataBounds& b = x.bounds();
  return Json{{"x", std::vector<double>(x.values().begin(), x.values().end())},
              {"mx", b.value_min},
              {"Mx", b.value_max},
              {"mt", b.total_min},
              {"Mt", b.total_max}};
}

absl::StatusOr<std::vector<AdjacentPair>> PairsFromJson(const Json& j) {
  const Json* list = &j;
  if (j.is_object() && j.contains("pairs")) list = &j["pairs"];
  std::vector<AdjacentPair> pairs;
  if (list->is_array()) {
    for (const Json& entry : *list) {
      HTDP_ASSIGN_OR_RETURN(AdjacentPair p, PairFromJson(entry));
      pairs.push_back(std::move(p));
    }
  } else {
    HTDP_ASSIGN_OR_RETURN(AdjacentPair p, PairFromJson(*list));
    pairs.push_back(std::move(p));
  }
  if (pairs.empty()) {
    return InvalidArgument("EmptyPairList", "pair file lists no pair");
  }
  return pairs;
}

Json PairToJson(const AdjacentPair& pair) {
  return Json{{"x", DatasetToJson(pair.x)},
              {"xp", DatasetToJson(pair.x_prime)},
              {"i", pair.unit}};
}

Json EpsilonToJson(double eps) {
  if (std::isinf(eps) && eps > 0) return "inf";
  return eps;
}

absl::StatusOr<double> EpsilonFromJson(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInfinity;
  if (j.is_number()) return j.get<double>();
  return Violation("epsilon must be a number or \"inf\"");
}

Json ProfileToJson(const PrivacyProfile& profile) {
  Json j = Versioned();
  j["b"] = profile.scale;
  Json points = Json::array();
  for (const ProfilePoint& p : profile.points) {
    points.push_back(
        {{"eps", p.epsilon},
         {"delta", p.delta},
         {"witness",
          {{"pair", p.witness.pair_index},
           {"i", p.witness.unit},
           {"dir", std::string(DirectionName(p.witness.direction))}}}});
  }
  j["points"] = std::move(points);
  return j;
}

std::string ProfileToCsv(const PrivacyProfile& profile) {
  std::ostringstream out;
  out << "eps,delta,witness_i\n";
  for (const ProfilePoint& p : profile.points) {
    out << Json(p.epsilon).dump() << ',' << Json(p.delta).dump() << ','
        << p.witness.unit << '\n';
  }
  return out.str();
}

Json CalibrationToJson(const Calibration& c) {
  Json j = Versioned();
  j["b"] = c.scale;
  j["delta_at_b"] = c.delta_at_scale;
  j["delta_below_b"] = c.delta_below_scale;
  j["monotone"] = c.monotone;
  j["sandwich_verified"] = c.sandwich_verified;
  j["witness"] = {{"pair", c.witness.witness.pair_index},
                  {"i", c.witness.witness.unit},
                  {"dir", std::string(DirectionName(c.witness.witness.direction))}};
  return j;
}

Json MomentsToJson(const ConditionalMoments& m) {
  Json j = Versioned();
  j["t_minus_i_given_i"] = NumberOrNull(m.t_minus_i_given_i);
  j["t_minus_i_given_not_i"] = NumberOrNull(m.t_minus_i_given_not_i);
  j["var_given_i"] = NumberOrNull(m.var_given_i);
  j["var_given_not_i"] = NumberOrNull(m.var_given_not_i);
  return j;
}

absl::StatusOr<Json> ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return MakeError(absl::StatusCode::kNotFound, "FileNotFound", path);
  }
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    return Violation(absl::StrCat(path, " is not valid JSON"));
  }
  return j;
}

}  // namespace htdp
