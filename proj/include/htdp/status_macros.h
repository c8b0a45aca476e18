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

#ifndef HTDP_STATUS_MACROS_H_
#define HTDP_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"

#define HTDP_STATUS_CONCAT_INNER_(a, b) a##b
#define HTDP_STATUS_CONCAT_(a, b) HTDP_STATUS_CONCAT_INNER_(a, b)

#define HTDP_RETURN_IF_ERROR(expr)           \
  do {                                       \
    const absl::Status _htdp_status = (expr); \
    if (!_htdp_status.ok()) return _htdp_status; \
  } while (0)

#define HTDP_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, rexpr) \
  auto tmp = (rexpr);                                \
  if (!tmp.ok()) return tmp.status();                \
  lhs = std::move(tmp).value()

#define HTDP_ASSIGN_OR_RETURN(lhs, rexpr) \
  HTDP_ASSIGN_OR_RETURN_IMPL_(            \
      HTDP_STATUS_CONCAT_(_htdp_statusor_, __LINE__), lhs, rexpr)

namespace htdp {

// Every error raised by the library carries a stable kind name as the prefix
// of its message ("Kind: detail"). The CLI reports the kind to callers.
inline absl::Status MakeError(absl::StatusCode code, absl::string_view kind,
                              absl::string_view detail) {
  return absl::Status(code, absl::StrCat(kind, ": ", detail));
}

inline absl::Status InvalidArgument(absl::string_view kind,
                                    absl::string_view detail) {
  return MakeError(absl::StatusCode::kInvalidArgument, kind, detail);
}

// Returns the kind prefix of `status`, or "Internal" when it has none.
inline absl::string_view ErrorKind(const absl::Status& status) {
  const absl::string_view msg = status.message();
  const size_t colon = msg.find(':');
  if (colon == absl::string_view::npos || colon == 0) return "Internal";
  return msg.substr(0, colon);
}

}  // namespace htdp

#endif  // HTDP_STATUS_MACROS_H_
