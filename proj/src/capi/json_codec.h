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

// JSON payloads of the C API. Ids are shifted to 1-based here and nowhere
// else.

#ifndef HYPERCOVER_CAPI_JSON_CODEC_H_
#define HYPERCOVER_CAPI_JSON_CODEC_H_

#include <string_view>

#include "hypercover/cover.h"
#include "hypercover/degeneracy.h"
#include "hypercover/domination.h"
#include "hypercover/hypergraph.h"
#include "hypercover/oracles.h"
#include "json.hpp"

namespace hypercover::capi {

nlohmann::json ToJson(std::string_view kind, const EliminationOrder& order);
nlohmann::json ToJson(std::string_view kind, const BruteForceValue& value);
nlohmann::json ToJson(const CoverCertificate& cert);
nlohmann::json ToJson(const TransversalCertificate& cert);
nlohmann::json ToJson(const DominationCertificate& cert);
nlohmann::json ToJson(const ExactResult& result);
nlohmann::json ToJson(const VcResult& result);
nlohmann::json ToJson(const AuditReport& report);

}  // namespace hypercover::capi

#endif  // HYPERCOVER_CAPI_JSON_CODEC_H_
