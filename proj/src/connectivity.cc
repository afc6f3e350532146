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

#include "isub/connectivity.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "isub/error.h"

namespace isub {

namespace {

// Unit-capacity vertex-split network: v_in = 2v, v_out = 2v + 1.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : n_(g.num_vertices()), head_(2 * n_, -1) {
    for (Vertex v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, kInf);
      add_arc(2 * v + 1, 2 * u, kInf);
    }
  }

  // Flow from s_out to t_in, at most cap units.
  int flow(Vertex s, Vertex t, int cap) {
    cap_ = base_cap_;
    const int source = 2 * s + 1, sink = 2 * t;
    int total = 0;
    std::vector<int> parent_arc(2 * n_);
    while (total < cap) {
      std::fill(parent_arc.begin(), parent_arc.end(), -2);
      parent_arc[source] = -1;
      std::vector<int> queue{source};
      for (std::size_t i = 0; i < queue.size() && parent_arc[sink] == -2; ++i) {
        int x = queue[i];
        for (int a = head_[x]; a >= 0; a = next_[a]) {
          if (cap_[a] > 0 && parent_arc[to_[a]] == -2) {
            parent_arc[to_[a]] = a;
            queue.push_back(to_[a]);
          }
        }
      }
      if (parent_arc[sink] == -2) break;
      for (int x = sink; x != source; x = to_[parent_arc[x] ^ 1]) {
        --cap_[parent_arc[x]];
        ++cap_[parent_arc[x] ^ 1];
      }
      ++total;
    }
    return total;
  }

  // After a flow that stopped below its cap: the saturated split arcs
  // reachable from s form a minimum separator.
  VertexSet cut(Vertex s) const {
    std::vector<char> seen(2 * n_, 0);
    std::vector<int> queue{2 * s + 1};
    seen[2 * s + 1] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (int a = head_[x]; a >= 0; a = next_[a]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          queue.push_back(to_[a]);
        }
      }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (seen[2 * v] && !seen[2 * v + 1]) out.push_back(v);
    }
    return out;
  }

 private:
  static constexpr int kInf = 1 << 29;

  void add_arc(int from, int to, int cap) {
    for (auto [a, b, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
      to_.push_back(b);
      base_cap_.push_back(c);
      next_.push_back(head_[a]);
      head_[a] = static_cast<int>(to_.size()) - 1;
    }
  }

  int n_;
  std::vector<int> head_, to_, next_, base_cap_, cap_;
};

bool is_complete(const Graph& g) {
  const std::int64_t n = g.num_vertices();
  return g.num_edges() == n * (n - 1) / 2;
}

// Smallest separator of size < cap, following Even's pair schedule: some
// vertex among the first cap ones avoids any separator of size < cap.
std::optional<VertexSet> separator_below(const Graph& g, int cap) {
  const int n = g.num_vertices();
  if (n < 2 || is_complete(g) || cap <= 0) return std::nullopt;
  auto comps = connected_components(g);
  if (comps.size() > 1) return VertexSet{};
  std::optional<VertexSet> best;
  int limit = cap;
  Vertex low = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(low)) low = v;
  }
  if (g.degree(low) < limit) {
    best = VertexSet(g.neighbors(low).begin(), g.neighbors(low).end());
    limit = g.degree(low);
  }
  SplitNetwork net(g);
  for (Vertex i = 0; i < n && i <= limit; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      int f = net.flow(i, j, limit);
      if (f < limit) {
        best = net.cut(i);
        limit = f;
      }
    }
  }
  return best;
}

}  // namespace

int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  if (!g.contains(s) || !g.contains(t) || s == t || g.has_edge(s, t)) {
    throw Error(ErrorKind::kInvalidInput, "local connectivity needs distinct non-adjacent vertices");
  }
  return SplitNetwork(g).flow(s, t, cap);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1 || is_complete(g)) return std::max(0, n - 1);
  auto sep = separator_below(g, n);
  return sep ? static_cast<int>(sep->size()) : n - 1;
}

std::optional<VertexSet> small_separator(const Graph& g, int k) {
  return separator_below(g, k);
}

bool is_k_connected(const Graph& g, int k, bool allow_small) {
  const int n = g.num_vertices();
  if (n < 3) return allow_small || (k <= 0);
  if (n <= k) return false;
  return !separator_below(g, k).has_value();
}

VertexSet boundary_of(const Graph& g, std::span<const Vertex> x) {
  std::vector<char> member(g.num_vertices(), 0);
  for (Vertex v : x) member[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) {
      if (!member[w]) {
        out.push_back(v);
        break;
      }
    }
  }
  return make_vertex_set(std::move(out));
}

BoundedSubgraph extract_bounded_subgraph(const Graph& g, int k, std::int64_t boundary_cap,
                                         std::int64_t min_size,
                                         std::int64_t max_candidates) {
  min_size = std::max<std::int64_t>(min_size, k + 1);
  std::vector<VertexSet> stack;
  {
    auto comps = connected_components(g);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    for (auto& c : comps) stack.push_back(std::move(c));
  }
  std::set<VertexSet> seen;
  std::optional<BoundedSubgraph> best;  // k-connected, smallest boundary
  std::int64_t processed = 0;
  while (!stack.empty()) {
    VertexSet x = std::move(stack.back());
    stack.pop_back();
    if (static_cast<std::int64_t>(x.size()) < min_size || !seen.insert(x).second) continue;
    if (++processed > max_candidates) break;
    auto sub = induced_subgraph(g, x);
    auto sep = separator_below(sub.graph, k);
    if (!sep) {
      BoundedSubgraph cand{x, boundary_of(g, x)};
      if (static_cast<std::int64_t>(cand.boundary.size()) <= boundary_cap) return cand;
      if (!best || cand.boundary.size() < best->boundary.size()) best = std::move(cand);
      continue;
    }
    // Split along the separator; each component keeps the separator.
    std::vector<char> cut(sub.graph.num_vertices(), 0);
    for (Vertex v : *sep) cut[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < sub.graph.num_vertices(); ++v) {
      if (!cut[v]) rest.push_back(v);
    }
    auto side = induced_subgraph(sub.graph, rest);
    auto parts = connected_components(side.graph);
    std::vector<VertexSet> pieces;
    for (const auto& part : parts) {
      std::vector<Vertex> host;
      for (Vertex v : part) host.push_back(sub.to_host[side.to_host[v]]);
      for (Vertex v : *sep) host.push_back(sub.to_host[v]);
      pieces.push_back(make_vertex_set(std::move(host)));
    }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    for (auto& p : pieces) stack.push_back(std::move(p));
  }
  std::string msg = "no " + std::to_string(k) + "-connected subgraph with at least " +
                    std::to_string(min_size) + " vertices and boundary <= " +
                    std::to_string(boundary_cap);
  if (best) {
    msg += "; best candidate has " + std::to_string(best->vertices.size()) +
           " vertices and boundary " + std::to_string(best->boundary.size());
  }
  throw Error(ErrorKind::kNotFound, msg);
}

BoundedSubgraph bounded_boundary_subgraph(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorKind::kInvalidInput, "k must be positive");
  const std::int64_t kk = static_cast<std::int64_t>(k) * k;
  if (g.num_vertices() == 0 || g.min_degree() < 4 * kk) {
    throw Error(ErrorKind::kHypothesisNotMet,
                "minimum degree " + std::to_string(g.min_degree()) + " is below 4k^2 = " +
                    std::to_string(4 * kk));
  }
  auto out = extract_bounded_subgraph(g, k, 2 * kk, 4 * kk + 1);
  // Independent re-check of all three postconditions.
  auto sub = induced_subgraph(g, out.vertices);
  if (!is_k_connected(sub.graph, k) ||
      static_cast<std::int64_t>(out.vertices.size()) <= 4 * kk ||
      static_cast<std::int64_t>(boundary_of(g, out.vertices).size()) > 2 * kk) {
    throw Error(ErrorKind::kStructureViolation, "bounded-boundary postcondition failed");
  }
  return out;
}

PeelResult peel_to_min_degree(const Graph& g, std::span<const Vertex> alive_set,
                              int threshold) {
  const int n = g.num_vertices();
  std::vector<char> alive(n, 0);
  for (Vertex v : alive_set) alive[v] = 1;
  std::vector<int> deg(n, 0);
  std::set<Vertex> low;
  for (Vertex v : alive_set) {
    for (Vertex w : g.neighbors(v)) deg[v] += alive[w];
    if (deg[v] < threshold) low.insert(v);
  }
  PeelResult out;
  while (!low.empty()) {
    Vertex v = *low.begin();
    low.erase(low.begin());
    alive[v] = 0;
    out.deletion_order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && --deg[w] < threshold) low.insert(w);
    }
  }
  for (Vertex v : alive_set) {
    if (alive[v]) out.core.push_back(v);
  }
  out.core = make_vertex_set(std::move(out.core));
  return out;
}

PeelResult peel_to_min_degree(const Graph& g, int threshold) {
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
  return peel_to_min_degree(g, all, threshold);
}

VertexSet max_core(const Graph& g) {
  return peel_to_min_degree(g, degeneracy_ordering(g).degeneracy).core;
}

namespace {

void write_ids(std::ostringstream& out, std::span<const Vertex> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
}

}  // namespace

std::string PeelTrace::to_text() const {
  std::ostringstream out;
  for (std::size_t t = 0; t < rounds.size(); ++t) {
    out << "round " << t + 1 << " | H: ";
    write_ids(out, rounds[t].h);
    out << " | S: ";
    write_ids(out, rounds[t].s);
    out << " | D: ";
    write_ids(out, rounds[t].d);
    out << '\n';
  }
  out << "leftover: ";
  write_ids(out, leftover);
  out << '\n';
  return out.str();
}

ConnectedGoodResult connected_good(const Graph& g, std::span<const Vertex> b, double d,
                                   const ConstantsProfile& profile) {
  const int n = g.num_vertices();
  const std::int64_t min_deg = profile.cg_min_degree.ceil_at(d);
  if (n == 0 || g.min_degree() < min_deg) {
    throw Error(ErrorKind::kHypothesisNotMet,
                "minimum degree " + std::to_string(g.min_degree()) + " below " +
                    std::to_string(min_deg));
  }
  if (b.empty()) throw Error(ErrorKind::kHypothesisNotMet, "b is empty");
  if (profile.cg_girth_per_exponent > 0) {
    double c = std::max(1.0, std::log(std::max(2, g.max_degree())) / std::log(d));
    auto gir = girth(g);
    if (gir && *gir < profile.cg_girth_per_exponent * c) {
      throw Error(ErrorKind::kHypothesisNotMet,
                  "girth " + std::to_string(*gir) + " below " +
                      std::to_string(profile.cg_girth_per_exponent * c));
    }
  }
  const int k = static_cast<int>(profile.cg_connectivity.ceil_at(d));
  const std::int64_t cap =
      static_cast<std::int64_t>(std::floor(profile.cg_boundary_cap.at(d) + 1e-9));
  const int peel = static_cast<int>(profile.cg_peel_degree.ceil_at(d));

  PeelTrace trace;
  std::vector<Vertex> alive(n);
  for (Vertex v = 0; v < n; ++v) alive[v] = v;
  while (!alive.empty()) {
    auto sub = induced_subgraph(g, alive);
    BoundedSubgraph piece;
    try {
      piece = extract_bounded_subgraph(sub.graph, k, cap, std::max(3, k + 1));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNotFound) throw;
      break;
    }
    PeelRound round;
    for (Vertex v : piece.vertices) round.h.push_back(sub.to_host[v]);
    for (Vertex v : piece.boundary) round.s.push_back(sub.to_host[v]);
    round.h = make_vertex_set(std::move(round.h));
    round.s = make_vertex_set(std::move(round.s));
    std::vector<Vertex> remaining;
    std::set_difference(alive.begin(), alive.end(), round.h.begin(), round.h.end(),
                        std::back_inserter(remaining));
    auto peeled = peel_to_min_degree(g, remaining, peel);
    round.d = std::move(peeled.deletion_order);
    alive = std::move(peeled.core);
    trace.rounds.push_back(std::move(round));
  }
  trace.leftover = alive;

  std::vector<char> in_b(n, 0);
  for (Vertex v : b) in_b[v] = 1;
  int best_round = -1;
  VertexSet best;
  for (std::size_t t = 0; t < trace.rounds.size(); ++t) {
    const auto& h = trace.rounds[t].h;
    std::vector<char> in_h(n, 0);
    for (Vertex v : h) in_h[v] = 1;
    VertexSet kept;
    for (Vertex v : h) {
      if (!in_b[v]) continue;
      bool full = true;
      for (Vertex w : g.neighbors(v)) full = full && in_h[w];
      if (full) kept.push_back(v);
    }
    if (best_round < 0 || kept.size() > best.size()) {
      best_round = static_cast<int>(t);
      best = std::move(kept);
    }
  }
  if (best_round < 0) {
    throw ConnectedGoodError(ErrorKind::kNotFound,
                             "no " + std::to_string(k) + "-connected piece with boundary <= " +
                                 std::to_string(cap),
                             std::move(trace));
  }
  const auto& h = trace.rounds[best_round].h;
  const std::int64_t floor = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(
             std::ceil(profile.cg_preserved_coeff * static_cast<double>(h.size()) /
                           std::max(1, g.max_degree()) -
                       1e-9)));
  if (static_cast<std::int64_t>(best.size()) < floor) {
    throw ConnectedGoodError(ErrorKind::kNotFound,
                             "best piece preserves " + std::to_string(best.size()) +
                                 " vertices of b, need " + std::to_string(floor),
                             std::move(trace));
  }
  ConnectedGoodResult out;
  out.h_prime = h;
  out.preserved = std::move(best);
  out.round = best_round;
  out.trace = std::move(trace);
  return out;
}

namespace {

class Linker {
 public:
  Linker(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs,
         std::span<const Vertex> forbidden, const LinkOptions& options)
      : g_(g), pairs_(pairs.begin(), pairs.end()), options_(options),
        n_(g.num_vertices()), blocked_(n_, 0), owner_(n_, -1) {
    for (Vertex v : forbidden) {
      if (!g.contains(v)) throw Error(ErrorKind::kInvalidInput, "forbidden vertex out of range");
      blocked_[v] = 1;
    }
    for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
      for (Vertex v : {pairs_[i].first, pairs_[i].second}) {
        if (!g.contains(v)) throw Error(ErrorKind::kInvalidInput, "endpoint out of range");
        if (blocked_[v]) throw Error(ErrorKind::kInvalidInput, "endpoint is forbidden");
        if (owner_[v] >= 0) throw Error(ErrorKind::kInvalidInput, "endpoints must be distinct");
        owner_[v] = i;
      }
    }
  }

  std::vector<Path> run() {
    if (pairs_.empty()) return {};
    if (auto p = greedy()) return *p;
    if (auto p = negotiate()) return *p;
    if (n_ <= options_.exhaustive_max_n) {
      if (auto p = exhaustive()) return *p;
      throw Error(ErrorKind::kNotFound, "no linkage exists for the given pairs");
    }
    throw Error(ErrorKind::kNotFound, "heuristic routing failed to link " +
                                          std::to_string(pairs_.size()) + " pairs");
  }

 private:
  // May pair i route through v (ignoring other paths)?
  bool open(int i, Vertex v) const {
    return !blocked_[v] && (owner_[v] < 0 || owner_[v] == i);
  }

  std::optional<Path> bfs(int i, const std::vector<char>& used) const {
    auto [x, y] = pairs_[i];
    std::vector<Vertex> parent(n_, -1);
    parent[x] = x;
    std::vector<Vertex> queue{x};
    for (std::size_t h = 0; h < queue.size() && parent[y] < 0; ++h) {
      Vertex u = queue[h];
      for (Vertex w : g_.neighbors(u)) {
        if (parent[w] >= 0 || !open(i, w) || used[w]) continue;
        parent[w] = u;
        queue.push_back(w);
      }
    }
    if (parent[y] < 0) return std::nullopt;
    Path p{y};
    while (p.back() != x) p.push_back(parent[p.back()]);
    std::reverse(p.begin(), p.end());
    return p;
  }

  std::optional<std::vector<Path>> greedy() const {
    std::vector<char> used(n_, 0);
    std::vector<Path> paths;
    for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
      auto p = bfs(i, used);
      if (!p) return std::nullopt;
      for (Vertex v : *p) used[v] = 1;
      paths.push_back(std::move(*p));
    }
    return paths;
  }

  // Rip-up and reroute with congestion costs (present sharing penalty grows
  // every round; history cost accumulates on contested vertices).
  std::optional<std::vector<Path>> negotiate() const {
    const int k = static_cast<int>(pairs_.size());
    std::vector<int> occ(n_, 0);
    std::vector<double> hist(n_, 0.0);
    std::vector<Path> paths(k);
    double present = 0.5;
    for (int round = 0; round < options_.reroute_rounds; ++round) {
      for (int i = 0; i < k; ++i) {
        for (Vertex v : paths[i]) --occ[v];
        auto p = cheapest(i, occ, hist, present);
        if (!p) return std::nullopt;  // unreachable even with sharing
        paths[i] = std::move(*p);
        for (Vertex v : paths[i]) ++occ[v];
      }
      bool clean = true;
      for (Vertex v = 0; v < n_; ++v) {
        if (occ[v] > 1) {
          clean = false;
          hist[v] += 1.0;
        }
      }
      if (clean) return paths;
      present *= 1.6;
    }
    return std::nullopt;
  }

  std::optional<Path> cheapest(int i, const std::vector<int>& occ,
                               const std::vector<double>& hist, double present) const {
    auto [x, y] = pairs_[i];
    std::vector<double> dist(n_, std::numeric_limits<double>::infinity());
    std::vector<Vertex> parent(n_, -1);
    using Item = std::pair<double, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[x] = 0;
    heap.push({0, x});
    while (!heap.empty()) {
      auto [dx, u] = heap.top();
      heap.pop();
      if (dx > dist[u]) continue;
      if (u == y) break;
      for (Vertex w : g_.neighbors(u)) {
        if (!open(i, w)) continue;
        double c = (1.0 + hist[w]) * (1.0 + present * occ[w]);
        if (dx + c < dist[w]) {
          dist[w] = dx + c;
          parent[w] = u;
          heap.push({dist[w], w});
        }
      }
    }
    if (parent[y] < 0) return std::nullopt;
    Path p{y};
    while (p.back() != x) p.push_back(parent[p.back()]);
    std::reverse(p.begin(), p.end());
    return p;
  }

  std::optional<std::vector<Path>> exhaustive() {
    std::vector<char> used(n_, 0);
    std::vector<Path> paths(pairs_.size());
    expanded_ = 0;
    for (auto [x, y] : pairs_) used[x] = used[y] = 1;
    if (place(0, used, paths)) return paths;
    return std::nullopt;
  }

  void tick() {
    if (++expanded_ > options_.budget) {
      throw Error(ErrorKind::kBudgetExhausted,
                  "linkage search exceeded " + std::to_string(options_.budget) + " nodes");
    }
  }

  // Remaining pairs must each still be connected through unused vertices.
  bool feasible(std::size_t from, const std::vector<char>& used) const {
    for (std::size_t i = from; i < pairs_.size(); ++i) {
      auto [x, y] = pairs_[i];
      std::vector<char> seen(n_, 0);
      std::vector<Vertex> queue{x};
      seen[x] = 1;
      bool hit = false;
      for (std::size_t h = 0; h < queue.size() && !hit; ++h) {
        for (Vertex w : g_.neighbors(queue[h])) {
          if (w == y) {
            hit = true;
            break;
          }
          if (seen[w] || used[w] || blocked_[w]) continue;
          seen[w] = 1;
          queue.push_back(w);
        }
      }
      if (!hit) return false;
    }
    return true;
  }

  bool place(std::size_t i, std::vector<char>& used, std::vector<Path>& paths) {
    if (i == pairs_.size()) return true;
    tick();
    if (!feasible(i, used)) return false;
    paths[i].assign(1, pairs_[i].first);
    return extend(i, used, paths);
  }

  bool extend(std::size_t i, std::vector<char>& used, std::vector<Path>& paths) {
    Vertex cur = paths[i].back();
    Vertex y = pairs_[i].second;
    if (g_.has_edge(cur, y)) {
      paths[i].push_back(y);
      if (place(i + 1, used, paths)) return true;
      paths[i].pop_back();
    }
    for (Vertex w : g_.neighbors(cur)) {
      if (used[w] || blocked_[w]) continue;
      tick();
      used[w] = 1;
      paths[i].push_back(w);
      if (extend(i, used, paths)) return true;
      paths[i].pop_back();
      used[w] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  LinkOptions options_;
  int n_;
  std::vector<char> blocked_;
  std::vector<int> owner_;
  std::int64_t expanded_ = 0;
};

}  // namespace

Linkage link_pairs(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs,
                   std::span<const Vertex> forbidden, const LinkOptions& options) {
  Linkage out;
  out.pairs.assign(pairs.begin(), pairs.end());
  out.paths = Linker(g, pairs, forbidden, options).run();
  std::string problem = check_linkage(g, out, forbidden);
  if (!problem.empty()) throw Error(ErrorKind::kStructureViolation, problem);
  return out;
}

std::string check_linkage(const Graph& g, const Linkage& l, std::span<const Vertex> forbidden) {
  if (l.pairs.size() != l.paths.size()) return "pair and path counts differ";
  std::vector<char> bad(g.num_vertices(), 0);
  for (Vertex v : forbidden) bad[v] = 1;
  std::vector<char> used(g.num_vertices(), 0);
  for (std::size_t i = 0; i < l.paths.size(); ++i) {
    const Path& p = l.paths[i];
    if (p.empty() || p.front() != l.pairs[i].first || p.back() != l.pairs[i].second) {
      return "path " + std::to_string(i) + " has wrong endpoints";
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!g.contains(p[k])) return "path leaves the graph";
      if (bad[p[k]]) return "path uses forbidden vertex " + std::to_string(p[k]);
      if (used[p[k]]) return "paths share vertex " + std::to_string(p[k]);
      used[p[k]] = 1;
      if (k + 1 < p.size() && !g.has_edge(p[k], p[k + 1])) {
        return "path " + std::to_string(i) + " uses a non-edge";
      }
    }
  }
  return {};
}

}  // namespace isub
