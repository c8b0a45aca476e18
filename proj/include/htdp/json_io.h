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

#ifndef HTDP_JSON_IO_H_
#define HTDP_JSON_IO_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "htdp/calibrate.h"
#include "htdp/design.h"
#include "htdp/estimator.h"
#include "htdp/gaussian_moments.h"
#include "htdp/laplace_profile.h"
#include "json.hpp"

namespace htdp {

inline constexpr absl::string_view kSchemaVersion = "htdp/1";

using Json = nlohmann::ordered_json;

// Design files:
//   {"type":"explicit","N":4,"samples":[{"s":[0,1],"p":0.25}, ...]}
//   {"type":"srs","N":100,"n":10}
// "N" is optional for explicit designs. Errors: SchemaViolation plus the
// design constructors' errors.
absl::StatusOr<Design> DesignFromJson(const Json& j);
Json DesignToJson(const Design& design);

// {"x":[0,1,0],"mx":0,"Mx":1,"mt":0,"Mt":3}
absl::StatusOr<Dataset> DatasetFromJson(const Json& j);
Json DatasetToJson(const Dataset& x);

// {"mx":0,"Mx":1,"mt":0,"Mt":3}
absl::StatusOr<DataBounds> BoundsFromJson(const Json& j);

// One pair is {"x":..., "xp":..., "i":3} where x and xp are either dataset
// objects or bare value arrays sharing bounds given on the pair itself.
// A pair file holds one pair, an array of pairs, or {"pairs":[...]}.
absl::StatusOr<std::vector<AdjacentPair>> PairsFromJson(const Json& j);
Json PairToJson(const AdjacentPair& pair);

// Finite values as numbers, +inf as the string "inf".
Json EpsilonToJson(double eps);
absl::StatusOr<double> EpsilonFromJson(const Json& j);

Json ProfileToJson(const PrivacyProfile& profile);
// Header "eps,delta,witness_i", one row per grid point.
std::string ProfileToCsv(const PrivacyProfile& profile);
Json CalibrationToJson(const Calibration& c);
Json MomentsToJson(const ConditionalMoments& m);

// Parses a file into JSON. Errors: FileNotFound, SchemaViolation.
absl::StatusOr<Json> ReadJsonFile(const std::string& path);

}  // namespace htdp

#endif  // HTDP_JSON_IO_H_
