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

#ifndef ISUB_CONNECTIVITY_H_
#define ISUB_CONNECTIVITY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isub/certificate.h"
#include "isub/error.h"
#include "isub/graph.h"
#include "isub/profile.h"

namespace isub {

// Maximum number of internally disjoint s-t paths, s and t non-adjacent,
// stopping early once `cap` paths are found.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap);

// n - 1 for complete graphs, 0 for disconnected ones.
int vertex_connectivity(const Graph& g);

// A vertex separator of size < k, if g has one. Complete graphs have none.
std::optional<VertexSet> small_separator(const Graph& g, int k);

// Graphs on fewer than 3 vertices count as k-connected only when
// `allow_small` is set; otherwise k-connected means more than k vertices and
// no separator of size < k.
bool is_k_connected(const Graph& g, int k, bool allow_small = false);

// Members of x with a neighbour outside x.
VertexSet boundary_of(const Graph& g, std::span<const Vertex> x);

struct BoundedSubgraph {
  VertexSet vertices;
  VertexSet boundary;
};

// Separator splitting: a candidate that is k-connected, has at least
// `min_size` vertices and boundary at most `boundary_cap` is returned;
// otherwise it is split along a separator of size < k and each side plus the
// separator is tried, largest first. Throws NotFound naming the best
// candidate seen once the search space or `max_candidates` is exhausted.
BoundedSubgraph extract_bounded_subgraph(const Graph& g, int k, std::int64_t boundary_cap,
                                         std::int64_t min_size,
                                         std::int64_t max_candidates = 20000);

// A k-connected subgraph with more than 4k^2 vertices and boundary at most
// 2k^2. Requires min degree >= 4k^2 (HypothesisNotMet otherwise).
BoundedSubgraph bounded_boundary_subgraph(const Graph& g, int k);

struct PeelResult {
  VertexSet core;
  std::vector<Vertex> deletion_order;
};

// Repeatedly deletes the lowest-id vertex of residual degree < threshold.
PeelResult peel_to_min_degree(const Graph& g, int threshold);
// Same, restricted to g[alive].
PeelResult peel_to_min_degree(const Graph& g, std::span<const Vertex> alive, int threshold);

// The k-core for k = degeneracy.
VertexSet max_core(const Graph& g);

struct PeelRound {
  VertexSet h;
  VertexSet s;
  std::vector<Vertex> d;
};

struct PeelTrace {
  std::vector<PeelRound> rounds;
  VertexSet leftover;

  // "round t | H: ... | S: ... | D: ..." then "leftover: ...".
  std::string to_text() const;
};

struct ConnectedGoodResult {
  VertexSet h_prime;
  VertexSet preserved;
  int round = 0;  // index into trace.rounds
  PeelTrace trace;
};

class ConnectedGoodError : public Error {
 public:
  ConnectedGoodError(ErrorKind kind, const std::string& message, PeelTrace trace)
      : Error(kind, message), trace(std::move(trace)) {}
  PeelTrace trace;
};

// Repeatedly extracts a bounded-boundary highly connected piece H_t, deletes
// it, and peels low-degree vertices D_t. Returns the piece holding the most
// members of b whose whole neighbourhood lies inside it. All thresholds are
// read from `profile` evaluated at d.
ConnectedGoodResult connected_good(const Graph& g, std::span<const Vertex> b, double d,
                                   const ConstantsProfile& profile);

struct Linkage {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Path> paths;
};

struct LinkOptions {
  int reroute_rounds = 200;
  int exhaustive_max_n = 40;
  std::int64_t budget = 2000000;
};

// Vertex-disjoint paths joining each pair, avoiding `forbidden`. Greedy
// shortest paths first, then negotiated rip-up-and-reroute, then a budgeted
// exhaustive search when g has at most exhaustive_max_n vertices.
// Throws NotFound or BudgetExhausted.
Linkage link_pairs(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs,
                   std::span<const Vertex> forbidden, const LinkOptions& options = {});

// Checks the Linkage invariants against g; empty string when valid.
std::string check_linkage(const Graph& g, const Linkage& l, std::span<const Vertex> forbidden);

}  // namespace isub

#endif  // ISUB_CONNECTIVITY_H_
