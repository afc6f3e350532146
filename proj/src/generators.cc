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

#include "isub/generators.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <deque>
#include <optional>
#include <set>
#include <sstream>

#include "isub/connectivity.h"
#include "isub/error.h"

namespace isub {
namespace {

int parse_positive(std::string_view text, std::string_view name) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || v < 1) {
    throw Error(ErrorKind::kUnknownName, "bad size in graph name '" + std::string(name) + "'");
  }
  return v;
}

Graph from_lcf(int n, std::span<const int> jumps) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
    int j = jumps[i % jumps.size()];
    edges.push_back({i, ((i + j) % n + n) % n});
  }
  return Graph(n, edges);
}

// Multigraph edge list with incremental short-cycle repair.
class PairingGraph {
 public:
  PairingGraph(int n, int d, RandomSource& rng) : n_(n), adj_(n) {
    std::vector<Vertex> points;
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < d; ++k) points.push_back(v);
    }
    rng.shuffle(points);
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      add(points[i], points[i + 1]);
    }
  }

  // An edge on a cycle shorter than g_min (loops and parallels included),
  // or none.
  std::optional<int> short_cycle_edge(int g_min) const {
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      auto [u, v] = edges_[e];
      if (u == v) return e;
    }
    std::vector<int> dist(n_, -1);
    std::vector<int> via(n_, -1);  // edge index used to reach the vertex
    std::vector<Vertex> touched;
    for (Vertex s = 0; s < n_; ++s) {
      for (Vertex t : touched) dist[t] = -1, via[t] = -1;
      touched.clear();
      std::deque<Vertex> queue{s};
      dist[s] = 0;
      touched.push_back(s);
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (2 * dist[u] + 1 >= g_min) break;
        for (int e : adj_[u]) {
          if (e == via[u]) continue;
          Vertex w = other(e, u);
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            via[w] = e;
            touched.push_back(w);
            queue.push_back(w);
          } else if (dist[w] + dist[u] + 1 < g_min) {
            return e;
          }
        }
      }
    }
    return std::nullopt;
  }

  // Replaces edges a=(u,v), b=(x,y) by (u,x),(v,y) or (u,y),(v,x).
  void swap_edges(int a, int b, bool cross) {
    auto [u, v] = edges_[a];
    auto [x, y] = edges_[b];
    if (cross) std::swap(x, y);
    remove(a);
    remove(b);
    edges_[a] = {u, x};
    edges_[b] = {v, y};
    attach(a);
    attach(b);
  }

  int num_edges() const { return static_cast<int>(edges_.size()); }

  Graph build() const {
    std::vector<Edge> out(edges_.begin(), edges_.end());
    return Graph(n_, out);
  }

 private:
  void add(Vertex u, Vertex v) {
    edges_.push_back({u, v});
    attach(static_cast<int>(edges_.size()) - 1);
  }
  void attach(int e) {
    adj_[edges_[e].first].push_back(e);
    if (edges_[e].second != edges_[e].first) adj_[edges_[e].second].push_back(e);
  }
  void remove(int e) {
    for (Vertex w : {edges_[e].first, edges_[e].second}) {
      auto& list = adj_[w];
      list.erase(std::remove(list.begin(), list.end(), e), list.end());
    }
  }
  Vertex other(int e, Vertex u) const {
    return edges_[e].first == u ? edges_[e].second : edges_[e].first;
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

bool all_pass(const std::vector<ManifestCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

// Applies a random permutation to the vertex ids of `g` and every role.
void relabel(PlantedInstance& inst, RandomSource& rng) {
  int n = inst.graph.num_vertices();
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  std::vector<Edge> edges;
  for (auto [u, v] : inst.graph.edges()) edges.push_back({perm[u], perm[v]});
  inst.graph = Graph(n, edges);
  for (auto& [name, set] : inst.roles) {
    std::vector<Vertex> mapped;
    for (Vertex v : set) mapped.push_back(perm[v]);
    set = make_vertex_set(std::move(mapped));
  }
}

int count_into(const Graph& g, Vertex v, const std::vector<char>& mask) {
  int c = 0;
  for (Vertex w : g.neighbors(v)) c += mask[w];
  return c;
}

std::vector<char> mask_of(int n, const VertexSet& s) {
  std::vector<char> m(n, 0);
  for (Vertex v : s) m[v] = 1;
  return m;
}

// Adds edge u-v only when it closes no cycle shorter than g_min.
bool add_if_far(std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v, int g_min) {
  if (u == v) return false;
  // bounded BFS from u to depth g_min - 2
  std::vector<std::pair<Vertex, int>> frontier{{u, 0}};
  std::set<Vertex> seen{u};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    auto [x, dx] = frontier[i];
    if (x == v) return false;
    if (dx >= g_min - 2) continue;
    for (Vertex w : adj[x]) {
      if (seen.insert(w).second) frontier.push_back({w, dx + 1});
    }
  }
  adj[u].push_back(v);
  adj[v].push_back(u);
  return true;
}

Graph from_adjacency(const std::vector<std::vector<Vertex>>& adj) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(adj.size()); ++u) {
    for (Vertex v : adj[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph(static_cast<int>(adj.size()), edges);
}

void check_girth(std::vector<ManifestCheck>& m, const Graph& g, std::int64_t floor) {
  auto gi = girth(g);
  m.push_back({"girth >= " + std::to_string(floor), !gi || *gi >= floor});
}

// One connector per pattern edge of a random dense pattern on m hubs.
PlantedInstance planted_unbalanced(const PlantedParams& params, RandomSource& rng,
                                   const ConstantsProfile& profile) {
  int d = params.get_int("d", 3);
  double ratio = params.get("ratio", profile.unbalanced_ratio.at(d));
  double density = params.get("density", 0.9);
  if (!(density > 0.0 && density <= 1.0) || ratio <= 0.0) {
    throw Error(ErrorKind::kInvalidInput, "unbalanced: need 0 < density <= 1, ratio > 0");
  }
  int m = 2;
  // expected connectors density * m(m-1)/2 with 10% slack over ratio * m
  while (density * m * (m - 1) / 2.0 < 1.1 * ratio * m + 10) ++m;
  std::vector<Edge> pattern;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (rng.bernoulli(density)) pattern.push_back({i, j});
    }
  }
  int n = m + static_cast<int>(pattern.size());
  std::vector<Edge> edges;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (int i = 0; i < m; ++i) b.push_back(i);
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    Vertex c = m + static_cast<Vertex>(k);
    a.push_back(c);
    edges.push_back({c, pattern[k].first});
    edges.push_back({c, pattern[k].second});
  }
  PlantedInstance inst{"unbalanced", Graph(n, edges), {{"a", a}, {"b", b}}, {}};
  relabel(inst, rng);

  const Graph& g = inst.graph;
  auto& ra = inst.roles["a"];
  auto& rb = inst.roles["b"];
  auto mb = mask_of(n, rb);
  inst.manifest.push_back({"degeneracy <= " + fmt(profile.degeneracy_cap.at(d)),
                           degeneracy_ordering(g).degeneracy <= profile.degeneracy_cap.at(d)});
  check_girth(inst.manifest, g, profile.unbalanced_girth);
  inst.manifest.push_back({"|a| >= " + fmt(ratio) + " |b|",
                           static_cast<double>(ra.size()) >= ratio * rb.size()});
  inst.manifest.push_back({"a-vertices have >= 2 b-neighbours",
                           std::all_of(ra.begin(), ra.end(), [&](Vertex v) {
                             return count_into(g, v, mb) >= 2;
                           })});
  return inst;
}

// Triple system on v = 3 * (odd) points (Bose construction).
std::vector<std::array<int, 3>> steiner_triples(int v) {
  if (v % 6 != 3) throw Error(ErrorKind::kInvalidInput, "largesub: order must be 3 mod 6");
  int q = v / 3;
  int half = (q + 1) / 2;
  auto id = [q](int x, int i) { return i * q + x; };
  std::vector<std::array<int, 3>> out;
  for (int x = 0; x < q; ++x) out.push_back({id(x, 0), id(x, 1), id(x, 2)});
  for (int x = 0; x < q; ++x) {
    for (int y = x + 1; y < q; ++y) {
      int mid = static_cast<int>((static_cast<long long>(x + y) * half) % q);
      for (int i = 0; i < 3; ++i) out.push_back({id(x, i), id(y, i), id(mid, (i + 1) % 3)});
    }
  }
  return out;
}

PlantedInstance planted_largesub(const PlantedParams& params, RandomSource& rng,
                                 const ConstantsProfile& profile) {
  int d = params.get_int("d", 3);
  bool early = params.get_int("early", 0) != 0;
  std::vector<Edge> edges;
  std::vector<Vertex> xs;
  std::vector<Vertex> ys;
  int n = 0;
  if (early) {
    // Hubs are triple-system points, x-vertices are triples: every hub sees
    // so many x-vertices that none of it is left in the small class.
    int order = params.get_int("order", 255);
    auto triples = steiner_triples(order);
    n = order + static_cast<int>(triples.size());
    for (int h = 0; h < order; ++h) ys.push_back(h);
    for (std::size_t k = 0; k < triples.size(); ++k) {
      Vertex x = order + static_cast<Vertex>(k);
      xs.push_back(x);
      for (int h : triples[k]) edges.push_back({x, h});
    }
  } else {
    // (3, arity)-biregular bipartite graph, no two x sharing two y.
    int ny = params.get_int("y", 100);
    int arity = params.get_int("arity", 6);
    int x_degree = std::max(d, 3);
    if (arity < 2 || (ny * arity) % x_degree != 0) {
      throw Error(ErrorKind::kInvalidInput, "largesub: y * arity must be divisible by " +
                                                std::to_string(x_degree));
    }
    int nx = ny * arity / x_degree;
    n = nx + ny;
    bool built = false;
    for (int attempt = 0; attempt < 200 && !built; ++attempt) {
      RandomSource r = rng.derive("largesub", attempt);
      std::vector<std::vector<Vertex>> adj(n);
      std::vector<int> cap(nx, x_degree);
      built = true;
      for (int y = 0; y < ny && built; ++y) {
        std::vector<Vertex> order;
        for (int x = 0; x < nx; ++x) {
          if (cap[x] > 0) order.push_back(x);
        }
        r.shuffle(order);
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return cap[a] > cap[b]; });
        std::vector<Vertex> chosen;
        std::set<Vertex> blocked;  // x-vertices already sharing a y with a chosen one
        for (Vertex x : order) {
          if (static_cast<int>(chosen.size()) == arity) break;
          if (blocked.count(x)) continue;
          chosen.push_back(x);
          for (Vertex yy : adj[x]) {
            for (Vertex x2 : adj[yy]) blocked.insert(x2);
          }
        }
        if (static_cast<int>(chosen.size()) < arity) {
          built = false;
          break;
        }
        Vertex yv = nx + y;
        for (Vertex x : chosen) {
          adj[x].push_back(yv);
          adj[yv].push_back(x);
          --cap[x];
        }
      }
      if (!built) continue;
      edges.clear();
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : adj[u]) {
          if (u < v) edges.push_back({u, v});
        }
      }
    }
    if (!built) throw Error(ErrorKind::kConstructionFailed, "largesub: no C4-free layout");
    for (int x = 0; x < nx; ++x) xs.push_back(x);
    for (int y = 0; y < ny; ++y) ys.push_back(nx + y);
  }
  PlantedInstance inst{"largesub", Graph(n, edges), {{"x", xs}, {"y", ys}}, {}};
  relabel(inst, rng);
  const Graph& g = inst.graph;
  const auto& rx = inst.roles["x"];
  inst.manifest.push_back({"degeneracy <= " + fmt(profile.degeneracy_cap.at(d)),
                           degeneracy_ordering(g).degeneracy <= profile.degeneracy_cap.at(d)});
  check_girth(inst.manifest, g, profile.unbalanced_girth);
  inst.manifest.push_back({"|x| >= " + fmt(profile.largesub_x_fraction) + " n",
                           rx.size() >= profile.largesub_x_fraction * n});
  auto floor = profile.largesub_min_degree.ceil_at(d);
  inst.manifest.push_back({"x-vertices have degree >= " + std::to_string(floor),
                           std::all_of(rx.begin(), rx.end(),
                                       [&](Vertex v) { return g.degree(v) >= floor; })});
  return inst;
}

// Dense random block plus circulant rings hanging off it by a few bridges.
PlantedInstance planted_connectedgood(const PlantedParams& params, RandomSource& rng,
                                      const ConstantsProfile& profile) {
  int d = params.get_int("d", 3);
  int block = params.get_int("block", 60);
  double density = params.get("density", 0.5);
  int rings = params.get_int("rings", 2);
  int ring = params.get_int("ring", 40);
  int jumps = params.get_int("jumps", 3);
  int bridges = params.get_int("bridges", 2);
  if (block < 2 || ring < 2 * jumps + 1 || rings < 0 || bridges < 0) {
    throw Error(ErrorKind::kInvalidInput, "connectedgood: bad sizes");
  }
  int n = block + rings * ring;
  std::vector<Edge> edges;
  for (int i = 0; i < block; ++i) {
    for (int j = i + 1; j < block; ++j) {
      if (rng.bernoulli(density)) edges.push_back({i, j});
    }
  }
  std::vector<Vertex> periphery;
  for (int r = 0; r < rings; ++r) {
    int base = block + r * ring;
    for (int i = 0; i < ring; ++i) {
      periphery.push_back(base + i);
      for (int j = 1; j <= jumps; ++j) edges.push_back({base + i, base + (i + j) % ring});
    }
    for (int k = 0; k < bridges; ++k) {
      edges.push_back({base + static_cast<Vertex>(rng.uniform(ring)),
                       static_cast<Vertex>(rng.uniform(block))});
    }
  }
  std::vector<Vertex> blk;
  for (int i = 0; i < block; ++i) blk.push_back(i);
  PlantedInstance inst{"connectedgood", Graph(n, edges),
                       {{"block", blk}, {"periphery", periphery}}, {}};
  relabel(inst, rng);
  const Graph& g = inst.graph;
  auto floor = profile.cg_min_degree.ceil_at(d);
  inst.manifest.push_back({"min degree >= " + std::to_string(floor), g.min_degree() >= floor});
  auto k = static_cast<int>(profile.cg_connectivity.ceil_at(d));
  auto sub = induced_subgraph(g, inst.roles["block"]);
  inst.manifest.push_back({"block is " + std::to_string(k) + "-connected",
                           is_k_connected(sub.graph, k)});
  return inst;
}

// Centres 0..N-1, each with `children` children; every child carries
// `fanout` paths centre-child-q-q'-child'-centre' of length 5 to distinct
// centres. With pad=1 every q gets a pendant t whose two further edges go to
// far-away t's, lifting the minimum degree to 3 without touching the paths.
PlantedInstance planted_maxdegree(const PlantedParams& params, RandomSource& rng,
                                  const ConstantsProfile& profile, bool force_pad,
                                  std::string kind) {
  int d = params.get_int("d", 3);
  int centers = params.get_int("centers", 200);
  int children = params.get_int("children", 3);
  int fanout = params.get_int("fanout", 6);
  bool pad = force_pad || params.get_int("pad", 1) != 0;
  int girth_floor = static_cast<int>(std::min<std::int64_t>(profile.maxdeg_girth, 1 << 20));
  if (children < 1 || fanout < 1 || centers <= children * fanout) {
    throw Error(ErrorKind::kInvalidInput, "maxdegree: need centers > children * fanout >= 1");
  }
  if (girth_floor > 15) {
    throw Error(ErrorKind::kConstructionFailed,
                "maxdegree: skeleton girth is 8 to 15, floor " + std::to_string(girth_floor));
  }
  int r = children * fanout;
  if ((centers * r) % 2 != 0) {
    throw Error(ErrorKind::kInvalidInput, "maxdegree: centers * children * fanout must be even");
  }
  Graph gamma = gen_regular_high_girth(centers, r, 3, rng);

  std::vector<std::vector<Vertex>> adj(centers);
  auto fresh = [&adj]() {
    adj.emplace_back();
    return static_cast<Vertex>(adj.size() - 1);
  };
  auto link = [&adj](Vertex u, Vertex v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  std::vector<std::vector<Vertex>> kids(centers);
  for (Vertex x = 0; x < centers; ++x) {
    for (int c = 0; c < children; ++c) {
      Vertex z = fresh();
      link(x, z);
      kids[x].push_back(z);
    }
  }
  // the k-th gamma edge at x hangs off child k / fanout
  std::vector<int> used(centers, 0);
  std::vector<Vertex> pendants;
  for (auto [x, y] : gamma.edges()) {
    Vertex zx = kids[x][used[x]++ / fanout];
    Vertex zy = kids[y][used[y]++ / fanout];
    Vertex q1 = fresh();
    Vertex q2 = fresh();
    link(zx, q1);
    link(q1, q2);
    link(q2, zy);
    if (pad) {
      for (Vertex q : {q1, q2}) {
        Vertex t = fresh();
        link(q, t);
        pendants.push_back(t);
      }
    }
  }
  if (pad) {
    // each pendant needs two far edges; random greedy matching rounds
    std::vector<int> need(adj.size(), 0);
    for (Vertex t : pendants) need[t] = 2;
    bool done = false;
    for (int round = 0; round < 400 && !done; ++round) {
      std::vector<Vertex> open;
      for (Vertex t : pendants) {
        if (need[t] > 0) open.push_back(t);
      }
      if (open.empty()) {
        done = true;
        break;
      }
      rng.shuffle(open);
      for (std::size_t i = 0; i + 1 < open.size(); i += 2) {
        Vertex u = open[i];
        Vertex v = open[i + 1];
        if (need[u] == 0 || need[v] == 0) continue;
        if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) continue;
        if (add_if_far(adj, u, v, std::max(8, girth_floor))) {
          --need[u];
          --need[v];
        }
      }
      if (open.size() == 1) break;
    }
    // an odd leftover gets a fresh partner chain closing back into itself
    for (Vertex t : pendants) {
      while (need[t] > 0) {
        Vertex partner = -1;
        for (Vertex w : pendants) {
          if (w != t && need[w] == 0 && adj[w].size() < 4 &&
              std::find(adj[t].begin(), adj[t].end(), w) == adj[t].end()) {
            if (add_if_far(adj, t, w, std::max(8, girth_floor))) {
              partner = w;
              break;
            }
          }
        }
        if (partner < 0) {
          throw Error(ErrorKind::kConstructionFailed, "maxdegree: pendants left unmatched");
        }
        --need[t];
      }
    }
  }
  Graph g = from_adjacency(adj);
  std::vector<Vertex> cs;
  for (Vertex x = 0; x < centers; ++x) cs.push_back(x);
  auto u_floor = profile.maxdeg_u_degree.ceil_at(d);
  std::vector<Vertex> u;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) >= u_floor) u.push_back(v);
  }
  PlantedInstance inst{kind, g, {{"centers", cs}, {"u", u}}, {}};
  int n = g.num_vertices();
  check_girth(inst.manifest, g, girth_floor);
  inst.manifest.push_back({"max degree <= " + fmt(profile.maxdeg_delta_cap.at(d)),
                           g.max_degree() <= profile.maxdeg_delta_cap.at(d)});
  auto dmin = profile.maxdeg_min_degree.ceil_at(d);
  inst.manifest.push_back({"min degree >= " + std::to_string(dmin), g.min_degree() >= dmin});
  inst.manifest.push_back({"|u| >= " + fmt(profile.maxdeg_u_fraction) + " n",
                           u.size() >= profile.maxdeg_u_fraction * n});
  if (force_pad) {
    auto tmin = profile.theorem_min_degree.ceil_at(d);
    inst.manifest.push_back({"min degree >= " + std::to_string(tmin), g.min_degree() >= tmin});
    check_girth(inst.manifest, g, profile.theorem_girth);
    inst.manifest.push_back({"max degree < " + fmt(profile.high_degree.at(d)),
                             g.max_degree() < profile.high_degree.at(d)});
  }
  return inst;
}

// Hubs with private spokes; each link vertex joins `arity` spokes of
// distinct hubs, so spokes see exactly one hub and links see none.
PlantedInstance planted_case1(const PlantedParams& params, RandomSource& rng,
                              const ConstantsProfile& profile) {
  int d = params.get_int("d", 3);
  int hubs = params.get_int("hubs", 40);
  int per_hub = params.get_int("spokes_per_hub", 30);
  int per_spoke = params.get_int("links_per_spoke", 2);
  int arity = params.get_int("arity", 3);
  int spokes = hubs * per_hub;
  if (arity < 2 || hubs < arity || (spokes * per_spoke) % arity != 0) {
    throw Error(ErrorKind::kInvalidInput, "case1: spokes * links_per_spoke must divide by arity");
  }
  int links = spokes * per_spoke / arity;
  int n = hubs + spokes + links;
  auto theorem_girth = static_cast<int>(std::min<std::int64_t>(profile.theorem_girth, 1 << 20));
  if (theorem_girth > 12) {
    throw Error(ErrorKind::kConstructionFailed,
                "case1: construction reaches girth 12 at most, floor " +
                    std::to_string(theorem_girth));
  }
  std::optional<Graph> built;
  for (int attempt = 0; attempt < 100 && !built; ++attempt) {
    RandomSource r = rng.derive("case1", attempt);
    std::vector<std::vector<Vertex>> adj(n);
    auto spoke = [&](int h, int k) { return hubs + h * per_hub + k; };
    for (int h = 0; h < hubs; ++h) {
      for (int k = 0; k < per_hub; ++k) {
        adj[h].push_back(spoke(h, k));
        adj[spoke(h, k)].push_back(h);
      }
    }
    std::vector<int> need(n, 0);
    std::vector<Vertex> pool;
    for (int s = hubs; s < hubs + spokes; ++s) {
      need[s] = per_spoke;
      pool.push_back(s);
    }
    bool ok = true;
    for (int l = 0; l < links && ok; ++l) {
      Vertex y = hubs + spokes + l;
      std::vector<Vertex> cand;
      for (Vertex s : pool) {
        if (need[s] > 0) cand.push_back(s);
      }
      r.shuffle(cand);
      std::stable_sort(cand.begin(), cand.end(),
                       [&](Vertex a, Vertex b) { return need[a] > need[b]; });
      std::vector<Vertex> chosen;
      for (Vertex s : cand) {
        if (static_cast<int>(chosen.size()) == arity) break;
        // distance from s to chosen spokes must be >= girth - 2
        bool far = true;
        std::vector<int> dist(n, -1);
        std::deque<Vertex> q{s};
        dist[s] = 0;
        while (!q.empty() && far) {
          Vertex u = q.front();
          q.pop_front();
          if (dist[u] >= theorem_girth - 3) continue;
          for (Vertex w : adj[u]) {
            if (dist[w] < 0) {
              dist[w] = dist[u] + 1;
              q.push_back(w);
            }
          }
        }
        for (Vertex c : chosen) {
          if (dist[c] >= 0) far = false;
        }
        if (far) chosen.push_back(s);
      }
      if (static_cast<int>(chosen.size()) < arity) {
        ok = false;
        break;
      }
      for (Vertex s : chosen) {
        adj[s].push_back(y);
        adj[y].push_back(s);
        --need[s];
      }
    }
    if (ok) built = from_adjacency(adj);
  }
  if (!built) throw Error(ErrorKind::kConstructionFailed, "case1: link layout failed");
  std::vector<Vertex> hs, ss, ls;
  for (int v = 0; v < n; ++v) (v < hubs ? hs : v < hubs + spokes ? ss : ls).push_back(v);
  PlantedInstance inst{"case1", *built, {{"hubs", hs}, {"spokes", ss}, {"links", ls}}, {}};
  relabel(inst, rng);
  const Graph& g = inst.graph;
  auto tmin = profile.theorem_min_degree.ceil_at(d);
  inst.manifest.push_back({"min degree >= " + std::to_string(tmin), g.min_degree() >= tmin});
  check_girth(inst.manifest, g, profile.theorem_girth);
  auto mh = mask_of(n, inst.roles["hubs"]);
  double high = profile.high_degree.at(d);
  inst.manifest.push_back({"hubs have degree >= " + fmt(high),
                           std::all_of(inst.roles["hubs"].begin(), inst.roles["hubs"].end(),
                                       [&](Vertex h) { return g.degree(h) >= high; })});
  int one_hub = 0;
  bool others_low = true;
  for (Vertex v = 0; v < n; ++v) {
    if (mh[v]) continue;
    if (g.degree(v) >= high) others_low = false;
    if (count_into(g, v, mh) == 1) ++one_hub;
  }
  inst.manifest.push_back({"only hubs have high degree", others_low});
  inst.manifest.push_back({"vertices with one hub neighbour >= " +
                               fmt(profile.case1_fraction) + " n",
                           one_hub >= profile.case1_fraction * n});
  return inst;
}

}  // namespace

Graph gen_named(std::string_view name) {
  if (name == "petersen") {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
      e.push_back({i, (i + 1) % 5});
      e.push_back({i, i + 5});
      e.push_back({i + 5, (i + 2) % 5 + 5});
    }
    return Graph(10, e);
  }
  if (name == "heawood") {
    static const int jumps[] = {5, -5};
    return from_lcf(14, jumps);
  }
  if (name == "mcgee") {
    static const int jumps[] = {12, 7, -7};
    return from_lcf(24, jumps);
  }
  if (name == "k4" || name == "k5") {
    int n = name == "k4" ? 4 : 5;
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    }
    return Graph(n, e);
  }
  if (name == "k33") {
    std::vector<Edge> e;
    for (int i = 0; i < 3; ++i) {
      for (int j = 3; j < 6; ++j) e.push_back({i, j});
    }
    return Graph(6, e);
  }
  if (name.starts_with("cycle:")) {
    int n = parse_positive(name.substr(6), name);
    if (n < 3) throw Error(ErrorKind::kUnknownName, "cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
  }
  if (name.starts_with("grid:")) {
    auto spec = name.substr(5);
    auto x = spec.find('x');
    if (x == std::string_view::npos) {
      throw Error(ErrorKind::kUnknownName, "grid needs RxC: '" + std::string(name) + "'");
    }
    int rows = parse_positive(spec.substr(0, x), name);
    int cols = parse_positive(spec.substr(x + 1), name);
    std::vector<Edge> e;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        int v = r * cols + c;
        if (c + 1 < cols) e.push_back({v, v + 1});
        if (r + 1 < rows) e.push_back({v, v + cols});
      }
    }
    return Graph(rows * cols, e);
  }
  throw Error(ErrorKind::kUnknownName, "unknown graph name '" + std::string(name) + "'");
}

Graph gen_regular_high_girth(int n, int d, int g_min, RandomSource& rng, int max_attempts) {
  if (n < 1 || d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0) {
    throw Error(ErrorKind::kInvalidInput, "need 0 <= d < n and n * d even");
  }
  if (d >= 2 && g_min >= 3) {
    auto moore = moore_floor(d, g_min);
    if (static_cast<std::uint64_t>(n) < moore.bound) {
      throw Error(ErrorKind::kInvalidInput, "n = " + std::to_string(n) +
                                                " is below the Moore bound " +
                                                std::to_string(moore.bound));
    }
  }
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    RandomSource r = rng.derive("regular", attempt);
    PairingGraph pg(n, d, r);
    int m = pg.num_edges();
    std::int64_t swaps = 0;
    std::int64_t limit = 200LL * n * std::max(1, d);
    while (swaps < limit) {
      auto bad = pg.short_cycle_edge(std::max(g_min, 3));
      if (!bad) {
        Graph g = pg.build();
        if (g.num_edges() == m) return g;
        break;
      }
      int other = static_cast<int>(r.uniform(m));
      if (other == *bad) continue;
      pg.swap_edges(*bad, other, r.bernoulli(0.5));
      ++swaps;
    }
  }
  throw Error(ErrorKind::kAttemptsExhausted,
              "no " + std::to_string(d) + "-regular graph of girth >= " + std::to_string(g_min) +
                  " on " + std::to_string(n) + " vertices in " + std::to_string(max_attempts) +
                  " attempts");
}

double PlantedParams::get(const std::string& key, double fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

int PlantedParams::get_int(const std::string& key, int fallback) const {
  double v = get(key, fallback);
  if (v != std::floor(v)) {
    throw Error(ErrorKind::kInvalidInput, "parameter " + key + " must be an integer");
  }
  return static_cast<int>(v);
}

void PlantedParams::set(std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw Error(ErrorKind::kInvalidInput, "expected key=value, got '" + std::string(assignment) + "'");
  }
  std::string value(assignment.substr(eq + 1));
  char* end = nullptr;
  double v = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::kInvalidInput, "bad value in '" + std::string(assignment) + "'");
  }
  values[std::string(assignment.substr(0, eq))] = v;
}

std::string PlantedInstance::manifest_text() const {
  std::ostringstream out;
  out << "kind: " << kind << '\n';
  out << "nodes: " << graph.num_vertices() << '\n';
  for (const auto& [name, set] : roles) {
    out << "role " << name << ":";
    for (Vertex v : set) out << ' ' << v;
    out << '\n';
  }
  for (const auto& c : manifest) out << c.name << ": " << (c.pass ? "pass" : "fail") << '\n';
  return out.str();
}

PlantedInstance gen_planted(std::string_view kind, const PlantedParams& params,
                            RandomSource& rng, const ConstantsProfile& profile) {
  PlantedInstance inst;
  if (kind == "unbalanced") {
    inst = planted_unbalanced(params, rng, profile);
  } else if (kind == "largesub") {
    inst = planted_largesub(params, rng, profile);
  } else if (kind == "connectedgood") {
    inst = planted_connectedgood(params, rng, profile);
  } else if (kind == "maxdegree") {
    inst = planted_maxdegree(params, rng, profile, false, "maxdegree");
  } else if (kind == "case1") {
    inst = planted_case1(params, rng, profile);
  } else if (kind == "case2") {
    inst = planted_maxdegree(params, rng, profile, true, "case2");
  } else {
    throw Error(ErrorKind::kUnknownName, "unknown planted kind '" + std::string(kind) + "'");
  }
  if (!all_pass(inst.manifest)) {
    std::string failed;
    for (const auto& c : inst.manifest) {
      if (!c.pass) failed += (failed.empty() ? "" : "; ") + c.name;
    }
    throw Error(ErrorKind::kConstructionFailed,
                std::string(kind) + ": manifest check failed: " + failed);
  }
  return inst;
}

}  // namespace isub
