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

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "isub/pipeline.h"
#include "pipeline_internal.h"

namespace isub {

using detail::count_into;
using detail::kv;
using detail::mask_of;
using detail::require;

namespace {

void note(Report* report, std::string_view stage, const std::string& detail) {
  if (report) report->add(stage, detail);
}

// Marks every vertex within `radius` of v.
void mark_ball(const Graph& g, Vertex v, int radius, std::vector<char>& marked) {
  std::vector<std::pair<Vertex, int>> queue{{v, 0}};
  marked[v] = 1;
  std::set<Vertex> visited{v};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [x, dx] = queue[i];
    if (dx == radius) continue;
    for (Vertex w : g.neighbors(x)) {
      if (visited.insert(w).second) {
        marked[w] = 1;
        queue.push_back({w, dx + 1});
      }
    }
  }
}

// Distances from `sources` inside h, capped at `limit` (larger = unreached).
std::vector<int> capped_distances(const Graph& h, std::span<const Vertex> sources, int limit) {
  std::vector<int> dist(h.num_vertices(), limit + 1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] >= limit) continue;
    for (Vertex w : h.neighbors(u)) {
      if (dist[w] > dist[u] + 1) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Edge key(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

// Host path of h-edge (v, u) oriented to start at v's host vertex.
Path oriented(const PathStructure& ps, Vertex v, Vertex u) {
  Path p = ps.path_of.at(key(v, u));
  if (p.front() != ps.s[v]) std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

BallDecomposition ball_decomposition(const Graph& g, std::span<const Vertex> u,
                                     const ConstantsProfile& profile) {
  const std::string stage = "ball_decomposition";
  detail::check_ids(g, u, stage);
  const int n = g.num_vertices();
  const int sep = profile.ball_separation;
  auto gi = girth(g);
  require(!gi || *gi > 2 * sep + 1, stage,
          kv("girth ", gi.value_or(0), " must exceed ", 2 * sep + 1));

  BallDecomposition bd;
  std::vector<char> blocked(n, 0);
  for (Vertex v : make_vertex_set({u.begin(), u.end()})) {
    if (blocked[v]) continue;
    bd.u_prime.push_back(v);
    mark_ball(g, v, sep, blocked);
  }
  bd.centers = bd.u_prime;
  for (Vertex v = 0; v < n; ++v) {
    if (blocked[v]) continue;
    bd.centers.push_back(v);
    mark_ball(g, v, sep, blocked);
  }
  std::sort(bd.centers.begin(), bd.centers.end());

  // Layered multi-source BFS: each vertex takes the smallest centre among
  // its neighbours one layer closer.
  bd.ball_of.assign(n, -1);
  std::vector<int> dist(n, -1);
  std::vector<Vertex> frontier = bd.centers;
  for (Vertex c : frontier) {
    dist[c] = 0;
    bd.ball_of[c] = c;
  }
  std::vector<Vertex> parent(n, -1);
  for (int layer = 1; !frontier.empty(); ++layer) {
    std::vector<Vertex> next;
    for (Vertex x : frontier) {
      for (Vertex w : g.neighbors(x)) {
        if (dist[w] == -1) {
          dist[w] = layer;
          bd.ball_of[w] = bd.ball_of[x];
          parent[w] = x;
          next.push_back(w);
        } else if (dist[w] == layer &&
                   (bd.ball_of[x] < bd.ball_of[w] ||
                    (bd.ball_of[x] == bd.ball_of[w] && x < parent[w]))) {
          bd.ball_of[w] = bd.ball_of[x];
          parent[w] = x;
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  for (Vertex c : bd.centers) bd.tree_edges[c];
  for (auto [a, b] : g.edges()) {
    if (bd.ball_of[a] == bd.ball_of[b]) bd.tree_edges[bd.ball_of[a]].push_back({a, b});
  }
  std::string bad = check_ball_decomposition(g, bd, profile);
  if (!bad.empty()) throw Error(ErrorKind::kStructureViolation, stage + ": " + bad);
  return bd;
}

std::string check_ball_decomposition(const Graph& g, const BallDecomposition& bd,
                                     const ConstantsProfile& profile) {
  const int n = g.num_vertices();
  const int sep = profile.ball_separation;
  if (static_cast<int>(bd.ball_of.size()) != n) return "ball_of has the wrong size";
  auto is_center = mask_of(n, bd.centers);
  for (Vertex c : bd.centers) {
    if (bd.ball_of[c] != c) return kv("centre ", c, " is not in its own ball");
    auto dist = capped_distances(g, std::vector<Vertex>{c}, sep);
    for (Vertex o : bd.centers) {
      if (o != c && dist[o] <= sep) return kv("centres ", c, " and ", o, " are too close");
    }
    for (Vertex w : ball(g, c, profile.ball_radius)) {
      if (bd.ball_of[w] != c) return kv("core ball of ", c, " leaks vertex ", w);
    }
  }
  std::map<Vertex, std::vector<Vertex>> members;
  for (Vertex v = 0; v < n; ++v) {
    Vertex c = bd.ball_of[v];
    if (c < 0 || c >= n || !is_center[c]) return kv("vertex ", v, " has no centre");
    members[c].push_back(v);
  }
  for (auto& [c, vs] : members) {
    auto sub = induced_subgraph(g, vs);
    if (sub.graph.num_edges() != static_cast<std::int64_t>(vs.size()) - 1) {
      return kv("ball of ", c, " is not a tree");
    }
    auto it = bd.tree_edges.find(c);
    if (it == bd.tree_edges.end() ||
        static_cast<std::int64_t>(it->second.size()) != sub.graph.num_edges()) {
      return kv("tree edges of ", c, " do not match its ball");
    }
    auto dist = bfs_distances(sub.graph, std::vector<Vertex>{sub.from_host.at(c)});
    for (int d : dist) {
      if (d < 0) return kv("ball of ", c, " is disconnected");
      if (d > sep) return kv("ball of ", c, " reaches distance ", d);
    }
  }
  return "";
}

StructureGraph build_structure(const Graph& g, const BallDecomposition& bd,
                               const ConstantsProfile& profile) {
  StructureGraph sg;
  sg.centers = bd.centers;
  std::map<Vertex, Vertex> local;
  for (std::size_t i = 0; i < sg.centers.size(); ++i) {
    local[sg.centers[i]] = static_cast<Vertex>(i);
  }
  std::map<Vertex, std::vector<Vertex>> members;
  for (Vertex v = 0; v < g.num_vertices(); ++v) members[bd.ball_of[v]].push_back(v);

  std::set<Edge> touching;
  for (auto [a, b] : g.edges()) {
    Vertex ca = bd.ball_of[a];
    Vertex cb = bd.ball_of[b];
    if (ca != cb) touching.insert(key(local.at(ca), local.at(cb)));
  }
  std::vector<Edge> edges;
  for (auto [i, j] : touching) {
    Vertex x = sg.centers[i];
    Vertex y = sg.centers[j];
    std::vector<Vertex> vs = members[x];
    vs.insert(vs.end(), members[y].begin(), members[y].end());
    Path p = induced_path_reduce(g, vs, x, y);
    if (static_cast<int>(p.size()) - 1 > profile.structure_path_cap) continue;
    std::set<Vertex> f;
    for (Vertex v : p) {
      f.insert(local.at(bd.ball_of[v]));
      for (Vertex w : g.neighbors(v)) f.insert(local.at(bd.ball_of[w]));
    }
    edges.push_back({i, j});
    sg.paths[{i, j}] = std::move(p);
    sg.f[{i, j}] = VertexSet(f.begin(), f.end());
  }
  sg.h_star = Graph(static_cast<int>(sg.centers.size()), edges);
  return sg;
}

PathStructure PathStructure::restrict_to(std::span<const Vertex> keep_in) const {
  VertexSet keep = make_vertex_set({keep_in.begin(), keep_in.end()});
  std::vector<Vertex> renum(h.num_vertices(), -1);
  PathStructure out;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    renum[keep[i]] = static_cast<Vertex>(i);
    out.s.push_back(s[keep[i]]);
  }
  std::vector<Edge> edges;
  for (const auto& [e, p] : path_of) {
    Vertex a = renum[e.first];
    Vertex b = renum[e.second];
    if (a < 0 || b < 0) continue;
    Edge ne = key(a, b);
    edges.push_back(ne);
    out.path_of[ne] = p;
    VertexSet fs;
    for (Vertex w : f.at(e)) {
      if (renum[w] >= 0) fs.push_back(renum[w]);
    }
    out.f[ne] = make_vertex_set(std::move(fs));
  }
  out.h = Graph(static_cast<int>(keep.size()), edges);
  return out;
}

PathStructure sparsify_with(const StructureGraph& sg, const std::vector<char>& kept,
                            const Graph& g, const ConstantsProfile& profile) {
  const int m = sg.h_star.num_vertices();
  if (static_cast<int>(kept.size()) != m) {
    throw Error(ErrorKind::kInvalidInput, "sparsify: assignment size mismatch");
  }
  PathStructure full;
  full.s = sg.centers;
  std::vector<Edge> edges;
  for (const auto& [e, fs] : sg.f) {
    if (!kept[e.first] || !kept[e.second]) continue;
    bool clean = std::none_of(fs.begin(), fs.end(), [&](Vertex w) {
      return w != e.first && w != e.second && kept[w];
    });
    if (!clean) continue;
    edges.push_back(e);
    full.path_of[e] = sg.paths.at(e);
    full.f[e] = fs;
  }
  full.h = Graph(m, edges);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < m; ++v) {
    if (kept[v]) keep.push_back(v);
  }
  PathStructure ps = full.restrict_to(keep);
  std::string bad = check_path_structure(g, ps, profile);
  if (!bad.empty()) throw Error(ErrorKind::kStructureViolation, "sparsify: " + bad);
  return ps;
}

PathStructure sparsify_structure(const StructureGraph& sg, const Graph& g, int d,
                                 const ConstantsProfile& profile, RandomSource& rng) {
  double p = std::min(1.0, profile.sparsify_p.at(d));
  std::vector<char> kept(sg.h_star.num_vertices(), 0);
  for (auto& k : kept) k = rng.bernoulli(p) ? 1 : 0;
  return sparsify_with(sg, kept, g, profile);
}

std::string check_path_structure(const Graph& g, const PathStructure& ps,
                                 const ConstantsProfile& profile) {
  std::vector<Edge> edges;
  std::map<Vertex, std::vector<int>> on_vertex;
  for (const auto& [e, p] : ps.path_of) {
    if (!ps.h.has_edge(e.first, e.second)) return kv("path for non-edge ", e.first, "-", e.second);
    if (p.empty() || p.front() != ps.s[e.first] || p.back() != ps.s[e.second]) {
      return kv("path of ", e.first, "-", e.second, " has wrong endpoints");
    }
    if (static_cast<int>(p.size()) - 1 > profile.induced_path_cap) {
      return kv("path of ", e.first, "-", e.second, " is too long");
    }
    if (make_vertex_set(p).size() != p.size()) return "path repeats a vertex";
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!g.has_edge(p[i], p[i + 1])) return "path uses a non-edge";
    }
    if (!is_induced_path(g, p)) return kv("path of ", e.first, "-", e.second, " has a chord");
    int idx = static_cast<int>(edges.size());
    edges.push_back(e);
    for (Vertex v : p) on_vertex[v].push_back(idx);
  }
  if (static_cast<std::int64_t>(edges.size()) != ps.h.num_edges()) return "h edge without path";
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const Path& p = ps.path_of.at(edges[i]);
    std::set<int> near;
    for (Vertex v : p) {
      for (int j : on_vertex[v]) near.insert(j);
      for (Vertex w : g.neighbors(v)) {
        auto it = on_vertex.find(w);
        if (it != on_vertex.end()) near.insert(it->second.begin(), it->second.end());
      }
    }
    for (int j : near) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a != c && a != d && b != c && b != d) {
        return kv("paths of disjoint edges ", a, "-", b, " and ", c, "-", d, " meet");
      }
    }
  }
  return "";
}

namespace {

// Paths from v through u1 and u2 share only v and see no edge between them.
bool compatible(const Graph& g, const Path& p1, const Path& p2) {
  std::set<Vertex> rest(p1.begin() + 1, p1.end());
  for (std::size_t i = 1; i < p2.size(); ++i) {
    if (rest.count(p2[i])) return false;
    for (Vertex w : g.neighbors(p2[i])) {
      if (rest.count(w)) return false;
    }
  }
  return true;
}

bool grow_clique(const std::vector<std::vector<char>>& ok, std::vector<int>& chosen, int from,
                 int want, std::int64_t& budget) {
  if (static_cast<int>(chosen.size()) == want) return true;
  const int k = static_cast<int>(ok.size());
  for (int i = from; i < k; ++i) {
    if (--budget < 0) return false;
    bool fits = std::all_of(chosen.begin(), chosen.end(), [&](int c) { return ok[c][i]; });
    if (!fits) continue;
    chosen.push_back(i);
    if (grow_clique(ok, chosen, i + 1, want, budget)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<Branchable> branchable_set(const PathStructure& ps, const Graph& g, int d) {
  std::vector<Branchable> out;
  for (Vertex v = 0; v < ps.h.num_vertices(); ++v) {
    auto nb = ps.h.neighbors(v);
    if (static_cast<int>(nb.size()) < d) continue;
    std::vector<Path> paths;
    for (Vertex u : nb) paths.push_back(oriented(ps, v, u));
    const int k = static_cast<int>(nb.size());
    std::vector<std::vector<char>> ok(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) ok[i][j] = ok[j][i] = compatible(g, paths[i], paths[j]);
    }
    std::vector<int> chosen;
    std::int64_t budget = 20000;
    if (!grow_clique(ok, chosen, 0, d, budget)) continue;
    Branchable b{v, {}};
    for (int i : chosen) b.witnesses.push_back(nb[i]);
    out.push_back(std::move(b));
  }
  return out;
}

bool check_branchable(const PathStructure& ps, const Graph& g, const Branchable& b) {
  if (b.v < 0 || b.v >= ps.h.num_vertices()) return false;
  std::set<Vertex> leaves;
  std::vector<Vertex> all;
  for (Vertex u : b.witnesses) {
    if (!ps.h.has_edge(b.v, u)) return false;
    Path p = oriented(ps, b.v, u);
    leaves.insert(p.back());
    all.insert(all.end(), p.begin(), p.end());
  }
  if (leaves.size() != b.witnesses.size()) return false;
  VertexSet vs = make_vertex_set(all);
  auto sub = induced_subgraph(g, vs);
  if (sub.graph.num_edges() != static_cast<std::int64_t>(vs.size()) - 1) return false;
  auto dist = bfs_distances(sub.graph, std::vector<Vertex>{sub.from_host.at(ps.s[b.v])});
  if (std::any_of(dist.begin(), dist.end(), [](int x) { return x < 0; })) return false;
  for (Vertex w : vs) {
    int deg = sub.graph.degree(sub.from_host.at(w));
    int want = w == ps.s[b.v] ? static_cast<int>(b.witnesses.size()) : leaves.count(w) ? 1 : 2;
    if (deg != want) return false;
  }
  return true;
}

SubdivisionCertificate assemble_from_structure(const PathStructure& ps, const Graph& g,
                                               std::span<const Branchable> branch,
                                               const ConstantsProfile& profile, int d) {
  const std::string stage = "assemble";
  const int t = d + 1;
  if (static_cast<int>(branch.size()) != t) {
    throw Error(ErrorKind::kInvalidInput, kv(stage, ": need ", t, " branch vertices"));
  }
  std::vector<Vertex> bv;
  std::set<Vertex> used;
  for (const auto& b : branch) {
    if (static_cast<int>(b.witnesses.size()) != d || !check_branchable(ps, g, b)) {
      throw Error(ErrorKind::kInvalidInput, kv(stage, ": ", b.v, " is not branchable"));
    }
    bv.push_back(b.v);
    if (!used.insert(b.v).second) {
      throw Error(ErrorKind::kInvalidInput, kv(stage, ": repeated branch vertex ", b.v));
    }
  }
  const int sep = profile.branch_separation;
  for (int i = 0; i < t; ++i) {
    auto dist = capped_distances(ps.h, std::vector<Vertex>{bv[i]}, sep);
    for (int j = 0; j < t; ++j) {
      require(i == j || dist[bv[j]] >= sep, stage,
              kv("branch vertices ", bv[i], " and ", bv[j], " are at distance ", dist[bv[j]],
                 " < ", sep));
    }
  }
  for (const auto& b : branch) {
    for (Vertex w : b.witnesses) {
      require(used.insert(w).second, stage, kv("witness ", w, " is shared"));
    }
  }

  std::vector<Vertex> rest;
  auto is_branch = mask_of(ps.h.num_vertices(), bv);
  for (Vertex v = 0; v < ps.h.num_vertices(); ++v) {
    if (!is_branch[v]) rest.push_back(v);
  }
  auto sub = induced_subgraph(ps.h, rest);
  int k = static_cast<int>(profile.link_connectivity.ceil_at(d));
  if (!is_k_connected(sub.graph, k, true)) {
    throw Error(ErrorKind::kNotFound,
                kv(stage, ": h minus branch vertices is not ", k, "-connected"));
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<std::pair<int, int>> which;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      Vertex a = branch[i].witnesses[j - 1];
      Vertex b = branch[j].witnesses[i];
      pairs.push_back({sub.from_host.at(a), sub.from_host.at(b)});
      which.push_back({i, j});
    }
  }
  LinkOptions opt;
  opt.reroute_rounds = profile.reroute_rounds;
  opt.exhaustive_max_n = profile.linkage_exhaustive_max_n;
  opt.budget = profile.linkage_budget;
  Linkage link = link_pairs(sub.graph, pairs, {}, opt);

  SubdivisionCertificate cert;
  for (Vertex v : bv) cert.branch.push_back(ps.s[v]);
  for (std::size_t k2 = 0; k2 < which.size(); ++k2) {
    auto [i, j] = which[k2];
    Path q;
    for (Vertex v : link.paths[k2]) q.push_back(sub.to_host[v]);
    std::vector<Vertex> vij;
    auto take = [&](const Path& p) { vij.insert(vij.end(), p.begin(), p.end()); };
    take(oriented(ps, bv[i], q.front()));
    for (std::size_t s = 0; s + 1 < q.size(); ++s) take(ps.path_of.at(key(q[s], q[s + 1])));
    take(oriented(ps, bv[j], q.back()));
    VertexSet vs = make_vertex_set(std::move(vij));
    cert.paths[{i, j}] = induced_path_reduce(g, vs, ps.s[bv[i]], ps.s[bv[j]]);
  }
  detail::require_induced(g, cert, stage);
  return cert;
}

SubdivisionCertificate lemma_maxdegree(const Graph& g, std::span<const Vertex> u_in, int d,
                                       const ConstantsProfile& profile,
                                       const RandomSource& rng, Report* report) {
  const std::string stage = "lemma_maxdegree";
  detail::check_ids(g, u_in, stage);
  VertexSet u = make_vertex_set({u_in.begin(), u_in.end()});
  const int n = g.num_vertices();
  require(u.size() >= profile.maxdeg_u_fraction * n, stage,
          kv("|u| = ", u.size(), " below ", profile.maxdeg_u_fraction, " n"));
  auto u_deg = profile.maxdeg_u_degree.ceil_at(d);
  for (Vertex v : u) {
    require(g.degree(v) >= u_deg, stage, kv("u-vertex ", v, " has degree below ", u_deg));
  }
  auto min_deg = profile.maxdeg_min_degree.ceil_at(d);
  require(g.min_degree() >= min_deg, stage,
          kv("min degree ", g.min_degree(), " below ", min_deg));
  double cap = profile.maxdeg_delta_cap.at(d);
  require(g.max_degree() <= cap, stage, kv("max degree ", g.max_degree(), " above ", cap));
  auto gi = girth(g);
  require(!gi || *gi >= profile.maxdeg_girth, stage,
          kv("girth ", gi.value_or(0), " below ", profile.maxdeg_girth));

  auto bd = detail::at_stage(stage + "/balls", [&] { return ball_decomposition(g, u, profile); });
  auto sg = build_structure(g, bd, profile);
  note(report, stage + "/structure",
       kv("centres=", bd.centers.size(), " |U'|=", bd.u_prime.size(),
          " |E(H*)|=", sg.h_star.num_edges()));

  // One variable per centre; events E_xz and the |U' cap S| floor.
  const int m = sg.h_star.num_vertices();
  double p = std::min(1.0, profile.sparsify_p.at(d));
  EventSystem sys;
  for (int i = 0; i < m; ++i) sys.add_variable(p);
  std::vector<Vertex> local(n, -1);
  for (int i = 0; i < m; ++i) local[sg.centers[i]] = i;
  auto floor = profile.event_path_floor.ceil_at(d);
  for (int x = 0; x < m; ++x) {
    std::map<Vertex, std::vector<Edge>> through;  // second path vertex -> edges
    for (Vertex y : sg.h_star.neighbors(x)) {
      Edge e = key(x, y);
      const Path& path = sg.paths.at(e);
      through[path.front() == sg.centers[x] ? path[1] : path[path.size() - 2]].push_back(e);
    }
    for (Vertex z : g.neighbors(sg.centers[x])) {
      std::vector<Edge> es = through[z];
      std::vector<int> scope{x};
      for (const Edge& e : es) {
        const auto& fs = sg.f.at(e);
        scope.insert(scope.end(), fs.begin(), fs.end());
      }
      const auto* fmap = &sg.f;
      sys.add_event(scope, [x, es, fmap, floor](const EventSystem::Assignment& a) {
        if (!a[x]) return false;
        std::int64_t kept = 0;
        for (const Edge& e : es) {
          if (!a[e.first] || !a[e.second]) continue;
          const auto& fs = fmap->at(e);
          bool clean = std::none_of(fs.begin(), fs.end(), [&](Vertex w) {
            return w != e.first && w != e.second && a[w];
          });
          kept += clean;
        }
        return kept < floor;
      });
    }
  }
  std::vector<int> u_local;
  for (Vertex v : bd.u_prime) u_local.push_back(local[v]);
  double conc = p / 2 * u_local.size();
  sys.add_event(u_local, [u_local, conc](const EventSystem::Assignment& a) {
    double kept = 0;
    for (int v : u_local) kept += a[v];
    return kept < conc;
  });
  RandomSource lll_rng = rng.derive("lemma_maxdegree", 0);
  auto lll = detail::at_stage(stage + "/lll",
                              [&] { return lll_resample(sys, lll_rng, profile.max_rounds); });
  note(report, stage + "/lll",
       kv("events=", sys.num_events(), " max_dependency=", sys.max_dependency_degree(),
          " resamples=", lll.resamples));

  auto ps = detail::at_stage(stage + "/sparsify",
                             [&] { return sparsify_with(sg, lll.assignment, g, profile); });
  auto struct_floor = profile.structure_min_degree.ceil_at(d);
  require(ps.h.num_vertices() > 0 && ps.h.min_degree() >= struct_floor, stage + "/min-degree",
          kv("min degree of H is ", ps.h.min_degree(), ", need ", struct_floor));
  auto branchable = branchable_set(ps, g, d);
  for (const auto& b : branchable) {
    if (!check_branchable(ps, g, b)) {
      throw Error(ErrorKind::kStructureViolation, stage + ": witness check failed");
    }
  }
  note(report, stage + "/sparsify",
       kv("|S|=", ps.h.num_vertices(), " |E(H)|=", ps.h.num_edges(), " delta(H)=",
          ps.h.min_degree(), " branchable=", branchable.size()));

  std::vector<Vertex> b_ids;
  for (const auto& b : branchable) b_ids.push_back(b.v);
  auto cg = detail::at_stage(stage + "/connected_good",
                             [&] { return connected_good(ps.h, b_ids, d, profile); });
  note(report, stage + "/connected_good",
       kv("|H'|=", cg.h_prime.size(), " preserved=", cg.preserved.size(), " round=", cg.round));

  PathStructure sub = ps.restrict_to(cg.h_prime);
  std::vector<Vertex> renum(ps.h.num_vertices(), -1);
  for (std::size_t i = 0; i < cg.h_prime.size(); ++i) renum[cg.h_prime[i]] = static_cast<Vertex>(i);
  auto preserved = mask_of(ps.h.num_vertices(), cg.preserved);
  std::vector<Branchable> pool;
  for (const auto& b : branchable) {
    if (!preserved[b.v]) continue;
    Branchable nb{renum[b.v], {}};
    for (Vertex w : b.witnesses) nb.witnesses.push_back(renum[w]);
    pool.push_back(std::move(nb));
  }

  // Greedy well-separated choice, restarted from later offsets if linking fails.
  const int t = d + 1;
  const int sep = profile.branch_separation;
  std::optional<Error> last;
  int attempts = 0;
  for (std::size_t start = 0; start < pool.size() && attempts < 20; ++start) {
    std::vector<Branchable> chosen;
    std::vector<int> near(sub.h.num_vertices(), sep + 1);
    for (std::size_t k = 0; k < pool.size() && static_cast<int>(chosen.size()) < t; ++k) {
      const auto& b = pool[(start + k) % pool.size()];
      if (near[b.v] < sep) continue;
      chosen.push_back(b);
      auto dist = capped_distances(sub.h, std::vector<Vertex>{b.v}, sep);
      for (std::size_t v = 0; v < near.size(); ++v) near[v] = std::min(near[v], dist[v]);
    }
    if (static_cast<int>(chosen.size()) < t) continue;
    ++attempts;
    try {
      auto cert = detail::at_stage(stage + "/assemble", [&] {
        return assemble_from_structure(sub, g, chosen, profile, d);
      });
      std::string picked;
      for (const auto& b : chosen) picked += kv(picked.empty() ? "" : ",", sub.s[b.v]);
      note(report, stage + "/assemble", kv("attempt=", attempts, " branch=", picked));
      return cert;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNotFound && e.kind() != ErrorKind::kBudgetExhausted &&
          e.kind() != ErrorKind::kHypothesisNotMet) {
        throw;
      }
      last = e;
    }
  }
  if (last) throw *last;
  throw Error(ErrorKind::kNotFound,
              kv(stage, "/select: fewer than ", t, " preserved branchable vertices ", sep,
                 " apart (pool ", pool.size(), ")"));
}

}  // namespace isub
