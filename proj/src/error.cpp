// Copyright 2026 The NetCollab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netcollab/error.hpp"

namespace netcollab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kEmptyActions: return "EmptyActions";
    case ErrorCode::kUnknownProtocol: return "UnknownProtocol";
    case ErrorCode::kMissingAttribute: return "MissingAttribute";
    case ErrorCode::kUnknownCard: return "UnknownCard";
    case ErrorCode::kNoAgentForAction: return "NoAgentForAction";
    case ErrorCode::kEpisodeClosed: return "EpisodeClosed";
    case ErrorCode::kMalformedAgentResponse: return "MalformedAgentResponse";
    case ErrorCode::kNotAnAction: return "NotAnAction";
    case ErrorCode::kUnsupportedAction: return "UnsupportedAction";
    case ErrorCode::kBadConfig: return "BadConfig";
    case ErrorCode::kInvalidWeights: return "InvalidWeights";
    case ErrorCode::kBadDataset: return "BadDataset";
    case ErrorCode::kBadCheckpoint: return "BadCheckpoint";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

BadDatasetError::BadDatasetError(std::size_t line_no, const std::string& detail)
    : Error(ErrorCode::kBadDataset,
            "BadDataset(" + std::to_string(line_no) + "): " + detail),
      line_no_(line_no) {}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace netcollab
