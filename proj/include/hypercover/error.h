// Copyright 2026 The hypercover Authors
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

#ifndef HYPERCOVER_ERROR_H_
#define HYPERCOVER_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypercover {

// Domain failures raised by the library. Each code has a stable name that the
// CLI prints verbatim.
enum class ErrorCode {
  kSyntaxError,
  kEmptyEdge,
  kVertexOutOfRange,
  kDuplicateEdge,
  kEmptySubset,
  kIsolatedVertex,
  kIdOutOfRange,
  kTooLarge,
  kNotATree,
  kSingleVertexOpen,
  kIsolatedVertexForOpen,
  kNTooSmall,
  kParameterError,
  kInfeasibleEdgeCount,
  kInvalidGraph,
  kInternal,
};

std::string_view ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypercover

#endif  // HYPERCOVER_ERROR_H_
