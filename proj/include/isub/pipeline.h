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

#ifndef ISUB_PIPELINE_H_
#define ISUB_PIPELINE_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isub/certificate.h"
#include "isub/error.h"
#include "isub/graph.h"
#include "isub/probabilistic.h"
#include "isub/profile.h"

namespace isub {

// Line-oriented run log: "stage | key=value ...".
class Report {
 public:
  void add(std::string_view stage, std::string_view detail);
  const std::vector<std::string>& lines() const { return lines_; }
  std::string to_text() const;

 private:
  std::vector<std::string> lines_;
};

// Thrown when a lemma stumbles onto an induced subdivision before reaching
// its stated conclusion.
class EarlySuccess : public Error {
 public:
  EarlySuccess(const std::string& message, SubdivisionCertificate certificate)
      : Error(ErrorKind::kEarlySuccess, message), certificate(std::move(certificate)) {}
  SubdivisionCertificate certificate;
};

// A <- many degree-2 connectors into a sparse hub set b. Requires g
// degenerate and of girth at least the profile floors, |a| >= ratio |b| and
// two b-neighbours per a-vertex.
SubdivisionCertificate lemma_unbalanced(const Graph& g, std::span<const Vertex> a,
                                        std::span<const Vertex> b, int d,
                                        const ConstantsProfile& profile,
                                        const RandomSource& rng, Report* report = nullptr);

struct LargesubResult {
  VertexSet x_prime;
  VertexSet y;
};

// Either disjoint (X', Y) with Y independent, every y having between 2 and
// the profile cap neighbours in X', and X' of bounded degree; or
// EarlySuccess from the unbalanced lemma.
LargesubResult lemma_largesub(const Graph& g, std::span<const Vertex> x, int d,
                              const ConstantsProfile& profile, const RandomSource& rng,
                              Report* report = nullptr);

// Empty string when (x', y) satisfies all five largesub properties.
std::string check_largesub(const Graph& g, std::span<const Vertex> x, const LargesubResult& r,
                           int d, const ConstantsProfile& profile);

struct BallDecomposition {
  VertexSet centers;                        // U' followed by W, as one sorted set
  VertexSet u_prime;
  std::vector<Vertex> ball_of;              // vertex -> its centre
  std::map<Vertex, std::vector<Edge>> tree_edges;
};

// Centres more than `ball_separation` apart, greedily from u (lowest id
// first) and then from all vertices; every vertex joins its nearest centre,
// ties to the smaller centre id. Needs girth > 2 * separation + 1.
BallDecomposition ball_decomposition(const Graph& g, std::span<const Vertex> u,
                                     const ConstantsProfile& profile);

// Empty string when every invariant holds.
std::string check_ball_decomposition(const Graph& g, const BallDecomposition& bd,
                                     const ConstantsProfile& profile);

struct StructureGraph {
  std::vector<Vertex> centers;              // local id -> host vertex
  Graph h_star;                             // on local ids
  std::map<Edge, Path> paths;               // local edge -> host path, from smaller local id
  std::map<Edge, VertexSet> f;              // local edge -> local centres touching its path
};

StructureGraph build_structure(const Graph& g, const BallDecomposition& bd,
                               const ConstantsProfile& profile);

struct PathStructure {
  std::vector<Vertex> s;                    // local id -> host vertex
  Graph h;                                  // on local ids
  std::map<Edge, Path> path_of;             // local edge -> host path
  std::map<Edge, VertexSet> f;              // local edge -> F-neighbourhood, local ids

  // Same structure on the local vertices `keep` (renumbered in order).
  PathStructure restrict_to(std::span<const Vertex> keep) const;
};

// Keeps h_star edges whose F-neighbourhood meets the kept centres exactly in
// its endpoints. `kept` is indexed by local centre id.
PathStructure sparsify_with(const StructureGraph& sg, const std::vector<char>& kept,
                            const Graph& g, const ConstantsProfile& profile);
PathStructure sparsify_structure(const StructureGraph& sg, const Graph& g, int d,
                                 const ConstantsProfile& profile, RandomSource& rng);

// Empty string when paths are induced, short, correctly ended, and paths of
// vertex-disjoint edges are disjoint with no host edge between them.
std::string check_path_structure(const Graph& g, const PathStructure& ps,
                                 const ConstantsProfile& profile);

struct Branchable {
  Vertex v = 0;                             // local id in ps.h
  std::vector<Vertex> witnesses;            // d local neighbours
};

std::vector<Branchable> branchable_set(const PathStructure& ps, const Graph& g, int d);

// Direct check: the host graph induced on the witness paths is a star
// subdivision centred at v with one leaf per witness.
bool check_branchable(const PathStructure& ps, const Graph& g, const Branchable& b);

// Links the witnesses of d + 1 branchable vertices pairwise inside
// h - branch and reduces the realised host walks to induced paths.
SubdivisionCertificate assemble_from_structure(const PathStructure& ps, const Graph& g,
                                               std::span<const Branchable> branch,
                                               const ConstantsProfile& profile, int d);

SubdivisionCertificate lemma_maxdegree(const Graph& g, std::span<const Vertex> u, int d,
                                       const ConstantsProfile& profile,
                                       const RandomSource& rng, Report* report = nullptr);

struct Case1Sample {
  VertexSet r_b;
  VertexSet r_x;
  VertexSet good;
  std::map<Vertex, Vertex> b_of;
};

// Empty string when the sample satisfies its invariants.
std::string check_case1_sample(const Graph& g, const Case1Sample& s);

SubdivisionCertificate theorem_main(const Graph& g, int d, const ConstantsProfile& profile,
                                    const RandomSource& rng, Report* report = nullptr);

}  // namespace isub

#endif  // ISUB_PIPELINE_H_
