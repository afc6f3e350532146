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

#include "isub/subdivision.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "isub/connectivity.h"
#include "isub/error.h"

namespace isub {

namespace {

std::vector<VertexSet> components_within(const Graph& g, std::span<const Vertex> s) {
  auto sub = induced_subgraph(g, s);
  std::vector<VertexSet> out;
  for (const auto& comp : connected_components(sub.graph)) {
    std::vector<Vertex> host;
    for (Vertex v : comp) host.push_back(sub.to_host[v]);
    out.push_back(make_vertex_set(std::move(host)));
  }
  return out;
}

}  // namespace

VertexSet dense_core(const Graph& g) {
  if (g.num_vertices() == 0) throw Error(ErrorKind::kNotFound, "empty graph");
  const int target =
      std::max(1, static_cast<int>(std::ceil(g.average_degree() / 4.0 - 1e-9)));
  std::vector<VertexSet> queue = components_within(g, max_core(g));
  std::set<VertexSet> seen;
  int best = -1;
  const std::size_t max_candidates = 5000;
  for (std::size_t head = 0; head < queue.size() && head < max_candidates; ++head) {
    VertexSet x = queue[head];
    if (static_cast<int>(x.size()) <= target || !seen.insert(x).second) continue;
    auto sub = induced_subgraph(g, x);
    auto sep = small_separator(sub.graph, target);
    if (!sep) {
      if (vertex_connectivity(sub.graph) < target) {
        throw Error(ErrorKind::kStructureViolation, "dense_core verification failed");
      }
      return x;
    }
    best = std::max(best, static_cast<int>(sep->size()));
    std::vector<char> cut(sub.graph.num_vertices(), 0);
    for (Vertex v : *sep) cut[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < sub.graph.num_vertices(); ++v) {
      if (!cut[v]) rest.push_back(v);
    }
    for (const auto& side : components_within(sub.graph, rest)) {
      std::vector<Vertex> piece(side.begin(), side.end());
      piece.insert(piece.end(), sep->begin(), sep->end());
      auto core = peel_to_min_degree(sub.graph, make_vertex_set(std::move(piece)), target);
      for (const auto& comp : components_within(sub.graph, core.core)) {
        std::vector<Vertex> host;
        for (Vertex v : comp) host.push_back(sub.to_host[v]);
        queue.push_back(make_vertex_set(std::move(host)));
      }
    }
  }
  throw Error(ErrorKind::kNotFound, "no subgraph reached connectivity " +
                                        std::to_string(target) + "; best separator size seen " +
                                        std::to_string(best));
}

namespace {

// One routing attempt on g[core] with the given branch vertices (host ids).
std::optional<SubdivisionCertificate> route_branches(const Graph& g,
                                                     const std::vector<Vertex>& branch,
                                                     std::span<const Vertex> core,
                                                     const ConstantsProfile& profile) {
  const int k = static_cast<int>(branch.size());
  std::vector<char> in_core(g.num_vertices(), 0);
  for (Vertex v : core) in_core[v] = 1;
  std::vector<char> taken(g.num_vertices(), 0);
  for (Vertex b : branch) taken[b] = 1;

  SubdivisionCertificate cert;
  cert.branch = branch;
  std::vector<std::pair<int, int>> open;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.has_edge(branch[i], branch[j])) {
        cert.paths[{i, j}] = {branch[i], branch[j]};
      } else {
        open.emplace_back(i, j);
      }
    }
  }
  // Spare common neighbours give length-two paths.
  std::vector<std::pair<int, int>> pending;
  for (auto [i, j] : open) {
    std::optional<Vertex> mid;
    for (Vertex w : g.neighbors(branch[i])) {
      if (in_core[w] && !taken[w] && g.has_edge(w, branch[j])) {
        mid = w;
        break;
      }
    }
    if (mid) {
      taken[*mid] = 1;
      cert.paths[{i, j}] = {branch[i], *mid, branch[j]};
    } else {
      pending.emplace_back(i, j);
    }
  }
  if (!pending.empty()) {
    std::vector<Vertex> interior;  // branch vertices and length-two midpoints
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (taken[v]) interior.push_back(v);
    }
    // Reserve one distinct neighbour per pending pair at each end.
    auto stub_for = [&](Vertex b) -> std::optional<Vertex> {
      for (Vertex w : g.neighbors(b)) {
        if (in_core[w] && !taken[w]) {
          taken[w] = 1;
          return w;
        }
      }
      return std::nullopt;
    };
    std::vector<std::pair<Vertex, Vertex>> stubs;
    for (auto [i, j] : pending) {
      auto a = stub_for(branch[i]);
      auto b = stub_for(branch[j]);
      if (!a || !b) return std::nullopt;
      stubs.emplace_back(*a, *b);
    }
    auto sub = induced_subgraph(g, core);
    std::vector<std::pair<Vertex, Vertex>> local_pairs;
    for (auto [a, b] : stubs) local_pairs.emplace_back(sub.from_host[a], sub.from_host[b]);
    std::vector<Vertex> local_forbidden;
    for (Vertex v : interior) {
      if (sub.from_host[v] >= 0) local_forbidden.push_back(sub.from_host[v]);
    }
    LinkOptions opt;
    opt.reroute_rounds = profile.reroute_rounds;
    opt.exhaustive_max_n = profile.linkage_exhaustive_max_n;
    opt.budget = profile.linkage_budget;
    Linkage link;
    try {
      link = link_pairs(sub.graph, local_pairs, local_forbidden, opt);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kNotFound || e.kind() == ErrorKind::kBudgetExhausted) {
        return std::nullopt;
      }
      throw;
    }
    for (std::size_t p = 0; p < pending.size(); ++p) {
      auto [i, j] = pending[p];
      Path path{branch[i]};
      for (Vertex v : link.paths[p]) path.push_back(sub.to_host[v]);
      path.push_back(branch[j]);
      cert.paths[{i, j}] = std::move(path);
    }
  }
  if (!verify_subdivision(g, cert).valid_plain) return std::nullopt;
  return cert;
}

std::optional<SubdivisionCertificate> strategy_dense(const Graph& g, int t,
                                                     const ConstantsProfile& profile) {
  const int k = t + 1;
  VertexSet core;
  try {
    core = dense_core(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNotFound) throw;
    core = max_core(g);
  }
  std::vector<VertexSet> cores{core};
  VertexSet mc = max_core(g);
  if (mc != core) cores.push_back(mc);
  for (const auto& c : cores) {
    if (static_cast<int>(c.size()) < k) continue;
    auto sub = induced_subgraph(g, c);
    std::vector<Vertex> ranked(c.begin(), c.end());
    std::stable_sort(ranked.begin(), ranked.end(), [&](Vertex a, Vertex b) {
      return sub.graph.degree(sub.from_host[a]) > sub.graph.degree(sub.from_host[b]);
    });
    // Top t + 1 first, then swap one of them for the next candidates.
    const int extra = std::min<int>(static_cast<int>(ranked.size()) - k, 4);
    for (int attempt = 0; attempt <= k * extra; ++attempt) {
      std::vector<Vertex> branch(ranked.begin(), ranked.begin() + k);
      if (attempt > 0) {
        int drop = (attempt - 1) % k, add = k + (attempt - 1) / k;
        branch[k - 1 - drop] = ranked[add];
      }
      bool degrees_ok = true;
      for (Vertex b : branch) degrees_ok &= sub.graph.degree(sub.from_host[b]) >= t;
      if (!degrees_ok) continue;
      if (auto cert = route_branches(g, branch, c, profile)) return cert;
    }
  }
  return std::nullopt;
}

}  // namespace

SubdivisionCertificate find_subdivision(const Graph& g, int t, const ConstantsProfile& profile) {
  if (t < 2) throw Error(ErrorKind::kInvalidInput, "t must be at least 2");
  const bool hypothesis = g.num_vertices() > 0 &&
                          g.average_degree() >= profile.subdivision_avg_degree.at(t) - 1e-9;
  if (auto cert = strategy_dense(g, t, profile)) return *cert;
  if (g.num_vertices() <= profile.brute_force_max_n) {
    if (auto cert = brute_force_plain(g, t + 1, profile.brute_force_budget)) {
      if (verify_subdivision(g, *cert).valid_plain) return *cert;
    }
    throw Error(hypothesis ? ErrorKind::kNotFound : ErrorKind::kHypothesisNotMet,
                "graph has no K_" + std::to_string(t + 1) + " subdivision");
  }
  if (hypothesis) {
    throw Error(ErrorKind::kNotFound,
                "routing failed for K_" + std::to_string(t + 1) + " subdivision");
  }
  throw Error(ErrorKind::kHypothesisNotMet,
              "average degree " + std::to_string(g.average_degree()) + " below " +
                  std::to_string(profile.subdivision_avg_degree.at(t)));
}

}  // namespace isub
