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

#include "json_codec.h"

#include <string>
#include <vector>

namespace hypercover::capi {

namespace {

using nlohmann::json;

template <typename Range>
json OneBased(const Range& ids) {
  json out = json::array();
  for (auto id : ids) out.push_back(static_cast<std::uint64_t>(id) + 1);
  return out;
}

json Optional(const std::optional<std::size_t>& v) {
  return v.has_value() ? json(*v) : json(nullptr);
}

}  // namespace

json ToJson(std::string_view kind, const EliminationOrder& order) {
  return {
      {"kind", std::string(kind)},
      {"value", order.value},
      {"order", OneBased(order.order)},
      {"step_values", order.step_values},
  };
}

json ToJson(std::string_view kind, const BruteForceValue& value) {
  return {
      {"kind", std::string(kind)},
      {"value", value.value},
      {"witness", OneBased(value.witness)},
  };
}

json ToJson(const CoverCertificate& cert) {
  return {
      {"cover", OneBased(cert.cover)},
      {"cover_size", cert.cover.size()},
      {"independent", OneBased(cert.independent)},
      {"independent_size", cert.independent.size()},
      {"per_step_edges", cert.per_step_edges},
      {"bound_factor", cert.bound_factor},
      {"mighty_bound", Optional(cert.mighty_bound)},
      {"checks",
       {
           {"cover_valid", cert.checks.cover_valid},
           {"independent_valid", cert.checks.independent_valid},
           {"inequality_holds", cert.checks.inequality_holds},
       }},
  };
}

json ToJson(const TransversalCertificate& cert) {
  return {
      {"transversal", OneBased(cert.transversal)},
      {"transversal_size", cert.transversal.size()},
      {"matching", OneBased(cert.matching)},
      {"matching_size", cert.matching.size()},
      {"bound_factor", cert.bound_factor},
      {"mighty_bound", Optional(cert.mighty_bound)},
      {"checks",
       {
           {"transversal_valid", cert.checks.transversal_valid},
           {"matching_valid", cert.checks.matching_valid},
           {"inequality_holds", cert.checks.inequality_holds},
       }},
  };
}

json ToJson(const DominationCertificate& cert) {
  json out = {
      {"kind", std::string(NeighborhoodKindName(cert.kind))},
      {"dominating", OneBased(cert.dominating)},
      {"dominating_size", cert.dominating.size()},
      {"packing", OneBased(cert.packing)},
      {"packing_size", cert.packing.size()},
      {"equal", cert.equal},
      {"checks",
       {
           {"dominating_valid", cert.dominating_valid},
           {"packing_valid", cert.packing_valid},
       }},
  };
  if (cert.cross_check.has_value()) {
    out["cross_check"] = {
        {"cover_size", cert.cross_check->cover_size},
        {"independent_size", cert.cross_check->independent_size},
        {"agrees", cert.cross_check->agrees},
    };
  }
  return out;
}

json ToJson(const ExactResult& result) {
  return {
      {"problem", std::string(ProblemName(result.problem))},
      {"value", result.value},
      {"witness", OneBased(result.witness)},
      {"explored", result.explored},
  };
}

json ToJson(const VcResult& result) {
  json witness = {
      {"set", OneBased(result.witness.set)},
      {"shattered", result.witness.shattered},
      {"missing_subset", result.witness.missing_subset.has_value()
                             ? OneBased(*result.witness.missing_subset)
                             : json(nullptr)},
  };
  return {
      {"value", result.value},
      {"none_shattered", result.none_shattered},
      {"witness", std::move(witness)},
  };
}

json ToJson(const AuditReport& report) {
  return {
      {"samples", report.samples},
      {"closed_checks", report.closed_checks},
      {"open_checks", report.open_checks},
      {"open_skipped", report.open_skipped},
      {"equivalence_violations", report.equivalence_violations},
      {"degree_bound_violations", report.degree_bound_violations},
      {"leaf_checks", report.leaf_checks},
      {"leaf_violations", report.leaf_violations},
      {"passed", report.passed()},
  };
}

}  // namespace hypercover::capi
