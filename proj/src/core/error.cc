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

#include "hypercover/error.h"

namespace hypercover {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError:
      return "SyntaxError";
    case ErrorCode::kEmptyEdge:
      return "EmptyEdge";
    case ErrorCode::kVertexOutOfRange:
      return "VertexOutOfRange";
    case ErrorCode::kDuplicateEdge:
      return "DuplicateEdge";
    case ErrorCode::kEmptySubset:
      return "EmptySubset";
    case ErrorCode::kIsolatedVertex:
      return "IsolatedVertex";
    case ErrorCode::kIdOutOfRange:
      return "IdOutOfRange";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kNotATree:
      return "NotATree";
    case ErrorCode::kSingleVertexOpen:
      return "SingleVertexOpen";
    case ErrorCode::kIsolatedVertexForOpen:
      return "IsolatedVertexForOpen";
    case ErrorCode::kNTooSmall:
      return "NTooSmall";
    case ErrorCode::kParameterError:
      return "ParameterError";
    case ErrorCode::kInfeasibleEdgeCount:
      return "InfeasibleEdgeCount";
    case ErrorCode::kInvalidGraph:
      return "InvalidGraph";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

}  // namespace hypercover
