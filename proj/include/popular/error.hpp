// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POPULAR_ERROR_HPP_
#define POPULAR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace popular {

enum class ErrorCode {
  kSchema,
  kOutOfRange,
  kPreferenceCycle,
  kForeignElement,
  kRootIncoming,
  kGroundMismatch,
  kNoCommonBase,
  kStructurallyInfeasible,
  kDeskScaleExceeded,
  kNotWeakRanking,
};

inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kPreferenceCycle: return "preference_cycle";
    case ErrorCode::kForeignElement: return "foreign_element";
    case ErrorCode::kRootIncoming: return "root_incoming";
    case ErrorCode::kGroundMismatch: return "ground_mismatch";
    case ErrorCode::kNoCommonBase: return "no_common_base";
    case ErrorCode::kStructurallyInfeasible: return "structurally_infeasible";
    case ErrorCode::kDeskScaleExceeded: return "desk_scale_exceeded";
    case ErrorCode::kNotWeakRanking: return "not_weak_ranking";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace popular

#endif  // POPULAR_ERROR_HPP_
