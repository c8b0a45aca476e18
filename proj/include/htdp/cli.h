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

#ifndef HTDP_CLI_H_
#define HTDP_CLI_H_

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace htdp {

// Entry point of the `htdp` command. `args` includes the program name.
// Results go to `out` as JSON (or CSV for `profile --format csv`); failures
// print {"schema":..., "error": kind, "message": ...} to `err`.
// Returns 0 on success, 2 on usage or validation errors, 1 otherwise.
int RunCli(std::span<const std::string> args, std::ostream& out,
           std::ostream& err);

// Parses "a:b:step" (points a + k*step below b + step/2) or a comma list.
// Errors: InvalidGrid.
absl::StatusOr<std::vector<double>> ParseEpsGrid(const std::string& spec);

}  // namespace htdp

#endif  // HTDP_CLI_H_
