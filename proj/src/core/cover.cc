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

#include "hypercover/cover.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "hypercover/degeneracy.h"
#include "hypercover/error.h"
#include "trace_state.h"

namespace hypercover {

namespace {

void RequireNoIsolatedVertex(const Hypergraph& h) {
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (h.incident_edges(v).empty()) {
      throw Error(ErrorCode::kIsolatedVertex,
                  "vertex " + std::to_string(v + 1) +
                      " lies in no edge and cannot be covered");
    }
  }
}

std::optional<std::size_t> MaybeMighty(const Hypergraph& h,
                                       MightyBound mighty) {
  if (mighty == MightyBound::kSkip ||
      h.num_vertices() > kMightyBruteForceCap) {
    return std::nullopt;
  }
  return MightyDegeneracyBruteForce(h).value;
}

}  // namespace

CoverCertificate GreedyCover(const Hypergraph& h, MightyBound mighty) {
  RequireNoIsolatedVertex(h);
  CoverCertificate cert;
  internal::TraceState state(h);
  while (state.num_alive() > 0) {
    const VertexId x = state.MinStrongDegreeVertex();
    const std::vector<std::size_t> picked = state.MaximalTracesContaining(x);
    if (picked.empty()) {
      // A surviving vertex keeps a nonempty trace of every base edge through
      // it, so this only fires on a broken invariant.
      throw Error(ErrorCode::kInternal,
                  "vertex " + std::to_string(x + 1) + " lost all its traces");
    }
    VertexSet doomed;
    for (std::size_t id : picked) {
      cert.cover.push_back(state.representative(id));
      const VertexSet& t = state.trace(id);
      doomed.insert(doomed.end(), t.begin(), t.end());
    }
    std::sort(doomed.begin(), doomed.end());
    doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
    cert.independent.push_back(x);
    cert.per_step_edges.push_back(picked.size());
    for (VertexId v : doomed) state.Remove(v);
  }
  std::sort(cert.cover.begin(), cert.cover.end());
  cert.cover.erase(std::unique(cert.cover.begin(), cert.cover.end()),
                   cert.cover.end());

  cert.bound_factor = StrongDegeneracy(h).value;
  cert.mighty_bound = MaybeMighty(h, mighty);

  const std::size_t steps = std::accumulate(
      cert.per_step_edges.begin(), cert.per_step_edges.end(), std::size_t{0});
  const std::size_t t = cert.independent.size();
  cert.checks.cover_valid = Check(h, SetKind::kEdgeCover, cert.cover);
  cert.checks.independent_valid =
      Check(h, SetKind::kIndependentSet, cert.independent);
  cert.checks.inequality_holds =
      cert.cover.size() <= steps && steps <= cert.bound_factor * t &&
      (!cert.mighty_bound.has_value() || steps <= *cert.mighty_bound * t);
  if (!cert.checks.cover_valid || !cert.checks.independent_valid ||
      !cert.checks.inequality_holds) {
    throw Error(ErrorCode::kInternal, "greedy cover certificate failed");
  }
  return cert;
}

TransversalCertificate GreedyTransversal(const Hypergraph& h,
                                         MightyBound mighty) {
  RequireNoIsolatedVertex(h);
  const Hypergraph dual = Dual(h);

  // Dual edge -> smallest vertex of H generating it.
  std::map<std::vector<EdgeId>, VertexId> generator;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const std::span<const EdgeId> inc = h.incident_edges(v);
    generator.emplace(std::vector<EdgeId>(inc.begin(), inc.end()), v);
  }

  const CoverCertificate dual_cert = GreedyCover(dual, mighty);
  TransversalCertificate cert;
  for (EdgeId de : dual_cert.cover) {
    cert.transversal.push_back(generator.at(dual.edge(de)));
  }
  std::sort(cert.transversal.begin(), cert.transversal.end());
  cert.matching.assign(dual_cert.independent.begin(),
                       dual_cert.independent.end());
  std::sort(cert.matching.begin(), cert.matching.end());
  cert.bound_factor = dual_cert.bound_factor;
  cert.mighty_bound = dual_cert.mighty_bound;

  cert.checks.transversal_valid =
      Check(h, SetKind::kTransversal, cert.transversal);
  cert.checks.matching_valid = Check(h, SetKind::kMatching, cert.matching);
  cert.checks.inequality_holds =
      cert.transversal.size() <= cert.bound_factor * cert.matching.size();
  if (!cert.checks.transversal_valid || !cert.checks.matching_valid ||
      !cert.checks.inequality_holds) {
    throw Error(ErrorCode::kInternal, "greedy transversal certificate failed");
  }
  return cert;
}

}  // namespace hypercover
