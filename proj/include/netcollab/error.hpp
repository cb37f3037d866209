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

#ifndef NETCOLLAB_ERROR_HPP_
#define NETCOLLAB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace netcollab {

// Every recoverable failure in the library is an Error carrying one of these
// codes. The numeric values are mirrored by nc_status in netcollab.h.
enum class ErrorCode : int {
  kDuplicateId = 10,
  kEmptyActions = 11,
  kUnknownProtocol = 12,
  kMissingAttribute = 13,
  kUnknownCard = 14,
  kNoAgentForAction = 15,
  kEpisodeClosed = 16,
  kMalformedAgentResponse = 17,
  kNotAnAction = 18,
  kUnsupportedAction = 19,
  kBadConfig = 20,
  kInvalidWeights = 21,
  kBadDataset = 22,
  kBadCheckpoint = 23,
  kInvalidArgument = 24,
  kIo = 25,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Dataset errors also carry the offending 1-based line number.
class BadDatasetError : public Error {
 public:
  BadDatasetError(std::size_t line_no, const std::string& detail);

  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::size_t line_no_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace netcollab

#endif  // NETCOLLAB_ERROR_HPP_
