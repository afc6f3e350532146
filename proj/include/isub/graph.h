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

#ifndef ISUB_GRAPH_H_
#define ISUB_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isub {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex ids. Most operations accept any
// range of ids and canonicalize on entry.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> ids);

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable after construction; two graphs compare equal iff they have the
// same vertex count and edge set.
class Graph {
 public:
  Graph() = default;

  // Builds a canonical graph. Parallel edges (in either orientation) collapse
  // to one. Throws InvalidInput on self-loops or ids outside [0, n).
  Graph(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::int64_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < num_vertices(); }

  // Zero for the empty graph.
  int min_degree() const;
  int max_degree() const;
  double average_degree() const;

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::int64_t num_edges_ = 0;
};

// Edge-list text: optional "nodes N" first line, then "u v" lines; lines
// starting with '#' and blank lines are ignored. Without a "nodes" line the
// vertex count is one more than the largest id mentioned.
Graph load_graph(std::string_view text);
std::string format_graph(const Graph& g);

// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

// BFS distance, nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

// All vertices at distance <= radius from center, sorted.
VertexSet ball(const Graph& g, Vertex center, int radius);

// BFS distances from `sources` (multi-source); -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources);

struct DegeneracyOrdering {
  std::vector<Vertex> order;
  std::vector<int> position;  // inverse of `order`
  int degeneracy = 0;
};

// Repeated minimum-degree removal, ties broken by lowest id.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

// Largest colour class of the greedy colouring that walks `ord` backwards.
// Every vertex sees at most `ord.degeneracy` already-coloured neighbours, so
// the class has at least n / (k + 1) vertices.
VertexSet greedy_independent_set(const Graph& g, const DegeneracyOrdering& ord);

// Same, restricted to `subset`: size is at least |subset| / (k + 1).
VertexSet greedy_independent_set(const Graph& g, const DegeneracyOrdering& ord,
                                 std::span<const Vertex> subset);

bool is_independent(const Graph& g, std::span<const Vertex> s);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;    // local id -> host id
  std::vector<Vertex> from_host;  // host id -> local id, -1 if absent
};

// Local ids follow the ascending order of host ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

struct MooreBound {
  std::uint64_t bound = 0;     // enforced lower bound on the vertex count
  std::uint64_t advisory = 0;  // ceil(d^(g/2)), asymptotic reference only
};

// Saturates at UINT64_MAX. Requires d >= 3 and g >= 3.
MooreBound moore_floor(int d, int g);

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace isub

#endif  // ISUB_GRAPH_H_
