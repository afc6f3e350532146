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

#ifndef ISUB_CERTIFICATE_H_
#define ISUB_CERTIFICATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isub/graph.h"

namespace isub {

using Path = std::vector<Vertex>;

// A K_t subdivision: t branch vertices and, for every pair i < j (0-based
// indices into `branch`), a path from branch[i] to branch[j].
struct SubdivisionCertificate {
  std::vector<Vertex> branch;
  std::map<std::pair<int, int>, Path> paths;

  int order() const { return static_cast<int>(branch.size()); }
  // Every vertex mentioned by the certificate, sorted.
  VertexSet vertices() const;

  friend bool operator==(const SubdivisionCertificate&,
                         const SubdivisionCertificate&) = default;
};

struct Violation {
  std::string kind;  // e.g. "path-overlap", "non-edge", "extra-edge"
  std::vector<Vertex> witness;
};

struct VerificationReport {
  bool valid_plain = false;
  bool valid_induced = false;
  std::vector<Violation> violations;
};

// Checks branch distinctness, pair coverage, path adjacency and internal
// disjointness. `valid_induced` is left false.
VerificationReport verify_subdivision(const Graph& g, const SubdivisionCertificate& c);

// verify_subdivision plus: the subgraph induced on all certificate vertices
// has no edge other than the path edges.
VerificationReport verify_induced_subdivision(const Graph& g,
                                              const SubdivisionCertificate& c);

// "branch t: v1 ... vt" then "path i j: u0 ... um" per pair (1-based i < j).
std::string format_certificate(const SubdivisionCertificate& c);
SubdivisionCertificate parse_certificate(std::string_view text);

// Exhaustive search for a K_t subdivision: branch t-subsets in lexicographic
// order, then backtracking over the pair paths. Exact whenever it returns;
// throws BudgetExhausted once `budget` search nodes have been expanded.
std::optional<SubdivisionCertificate> brute_force_induced(const Graph& g, int t,
                                                          std::int64_t budget);
// Same search without the inducedness constraint.
std::optional<SubdivisionCertificate> brute_force_plain(const Graph& g, int t,
                                                        std::int64_t budget);

// Maps an auxiliary edge (u, v), u < v in auxiliary ids, to a host path from
// aux_to_host[u] to aux_to_host[v].
using EdgeRealization = std::map<Edge, Path>;

// Replaces every auxiliary edge of `aux_cert` by its host realization.
// Throws LiftConflict if a realization is missing, malformed, or overlaps
// another one, or if the lifted certificate fails verification.
SubdivisionCertificate lift_subdivision(const Graph& host, const Graph& aux,
                                        std::span<const Vertex> aux_to_host,
                                        const SubdivisionCertificate& aux_cert,
                                        const EdgeRealization& realization);

// Lexicographically least shortest a-b path inside g[vs]. Shortest paths are
// chordless, so the result is an induced path of g. Throws Disconnected.
Path induced_path_reduce(const Graph& g, std::span<const Vertex> vs, Vertex a, Vertex b);

// True iff no edge of g joins two non-consecutive vertices of `p`.
bool is_induced_path(const Graph& g, std::span<const Vertex> p);

}  // namespace isub

#endif  // ISUB_CERTIFICATE_H_
