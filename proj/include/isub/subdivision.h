// Copyright 2026 The isub Authors
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

#ifndef ISUB_SUBDIVISION_H_
#define ISUB_SUBDIVISION_H_

#include "isub/certificate.h"
#include "isub/graph.h"
#include "isub/profile.h"

namespace isub {

// A vertex set inducing a subgraph of connectivity at least
// ceil(average_degree(g) / 4). Candidates start from the components of the
// maximum core; a candidate that falls short is split along a small
// separator and each side (with the separator) is peeled back to the target
// minimum degree. Throws NotFound reporting the best connectivity seen.
VertexSet dense_core(const Graph& g);

// A (not necessarily induced) subdivision of K_{t+1}. Branch vertices are the
// t + 1 highest-degree vertices of a dense core; adjacent branch pairs use
// their edge, pairs with a spare common neighbour use it, and the rest are
// routed between reserved neighbour stubs with link_pairs. Falls back to the
// exhaustive search on graphs with at most profile.brute_force_max_n
// vertices. Throws HypothesisNotMet when the average degree is below
// profile.subdivision_avg_degree at t and nothing was found, NotFound when the
// hypothesis held but routing failed.
SubdivisionCertificate find_subdivision(const Graph& g, int t, const ConstantsProfile& profile);

}  // namespace isub

#endif  // ISUB_SUBDIVISION_H_
