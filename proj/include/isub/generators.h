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

#ifndef ISUB_GENERATORS_H_
#define ISUB_GENERATORS_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "isub/graph.h"
#include "isub/probabilistic.h"
#include "isub/profile.h"

namespace isub {

// petersen, heawood, mcgee, k4, k5, k33, cycle:N, grid:RxC.
// Throws UnknownName.
Graph gen_named(std::string_view name);

// d-regular graph of girth >= g_min: random pairing, then edge swaps that
// break short cycles. Throws InvalidInput when n*d is odd or n is below the
// Moore bound, AttemptsExhausted when no attempt converges.
Graph gen_regular_high_girth(int n, int d, int g_min, RandomSource& rng, int max_attempts = 50);

// Numeric knobs by name; anything unset takes the kind's default.
struct PlantedParams {
  std::map<std::string, double> values;

  double get(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  // "key=value" pairs; throws InvalidInput.
  void set(std::string_view assignment);
};

struct ManifestCheck {
  std::string name;
  bool pass = false;
};

struct PlantedInstance {
  std::string kind;
  Graph graph;
  std::map<std::string, VertexSet> roles;
  std::vector<ManifestCheck> manifest;

  // "kind: K" then "role R: v..." then "check: pass|fail" per check.
  std::string manifest_text() const;
};

// Instances built to satisfy one stage's hypotheses under `profile`:
//   unbalanced     roles a, b          (d, ratio, density)
//   largesub       roles x, y          (d, y, arity; early=1 for the
//                                       contradiction branch, order)
//   connectedgood  roles block, periphery  (block, density, rings, ring,
//                                       jumps, bridges)
//   maxdegree      roles centers, u    (centers, children, fanout, pad)
//   case1          roles hubs, spokes, links  (hubs, spokes_per_hub,
//                                       links_per_spoke, arity)
//   case2          maxdegree with pad=1, so that min degree >= 3
// Every manifest check is re-run before returning; a failing check throws
// ConstructionFailed. Unknown kinds throw UnknownName.
PlantedInstance gen_planted(std::string_view kind, const PlantedParams& params,
                            RandomSource& rng,
                            const ConstantsProfile& profile = ConstantsProfile::relaxed());

}  // namespace isub

#endif  // ISUB_GENERATORS_H_
