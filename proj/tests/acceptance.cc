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

// Acceptance run: one line per criterion, "criterion N: PASS|FAIL | detail".
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "isub/certificate.h"
#include "isub/connectivity.h"
#include "isub/generators.h"
#include "isub/graph.h"
#include "isub/pipeline.h"
#include "isub/probabilistic.h"
#include "isub/profile.h"
#include "oracles.h"

namespace {

using namespace isub;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string digest;  // everything a rerun must reproduce byte for byte
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::string field(const std::string& line, const std::string& key) {
  auto at = line.find(key + "=");
  if (at == std::string::npos) return "";
  auto start = at + key.size() + 1;
  return line.substr(start, line.find(' ', start) - start);
}

std::string line_of(const Report& r, const std::string& prefix) {
  for (const auto& l : r.lines()) {
    if (l.starts_with(prefix)) return l;
  }
  return "";
}

bool oracle_certificate(const Graph& g, const SubdivisionCertificate& c, int t) {
  auto vs = c.vertices();
  return oracle::is_induced_kt_subdivision_sparse(g, {vs.begin(), vs.end()}, t);
}

// ---- 1: certificates against an independent enumerator ----

using Adj = std::vector<std::uint32_t>;  // bitmask rows, n <= 9

// Colour refinement, then the least upper-triangle code over all orderings
// that respect the refined colour classes.
std::uint64_t canonical_code(const Adj& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = __builtin_popcount(a[v]);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      std::vector<int> nb;
      for (int w = 0; w < n; ++w) {
        if (a[v] >> w & 1) nb.push_back(colour[w]);
      }
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {s, v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
      next[sorted[i].second] = c;
    }
    if (next == colour) break;
    colour = next;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return colour[x] != colour[y] ? colour[x] < colour[y] : x < y; });
  // Permute within each colour class.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    cells.push_back({i, j});
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (cell == cells.size()) {
      std::uint64_t code = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) code = code << 1 | (a[order[i]] >> order[j] & 1);
      best = std::min(best, code);
      return;
    }
    auto [lo, hi] = cells[cell];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(cell + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

// All connected graphs on n vertices up to isomorphism: every connected
// graph has a non-cut vertex, so extending (n-1)-vertex connected graphs by
// one vertex with a non-empty neighbourhood reaches them all.
std::vector<std::vector<Adj>> connected_graphs(int max_n) {
  std::vector<std::vector<Adj>> out(max_n + 1);
  out[1] = {Adj{0}};
  for (int n = 2; n <= max_n; ++n) {
    std::unordered_set<std::uint64_t> seen;
    for (const Adj& g : out[n - 1]) {
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        Adj h = g;
        h.push_back(mask);
        for (int v = 0; v < n - 1; ++v) {
          if (mask >> v & 1) h[v] |= 1u << (n - 1);
        }
        if (seen.insert(canonical_code(h)).second) out[n].push_back(h);
      }
    }
  }
  return out;
}

Graph graph_of(const Adj& a) {
  std::vector<Edge> e;
  for (int u = 0; u < static_cast<int>(a.size()); ++u)
    for (int v = u + 1; v < static_cast<int>(a.size()); ++v)
      if (a[u] >> v & 1) e.push_back({u, v});
  return Graph(static_cast<int>(a.size()), e);
}

Outcome criterion1() {
  Outcome o;
  const auto profile = ConstantsProfile::relaxed();
  int checked = 0, positive = 0;
  auto check = [&](const Graph& g) {
    ++checked;
    auto cert = brute_force_induced(g, 4, profile.brute_force_budget);
    bool expected = oracle::has_induced_kt_subdivision(oracle::matrix_of(g), 4);
    if (cert.has_value() != expected) {
      fail(o, "disagreement on " + format_graph(g));
      return;
    }
    if (cert) {
      ++positive;
      if (!verify_induced_subdivision(g, *cert).valid_induced) {
        fail(o, "certificate failed verification on " + format_graph(g));
      }
    }
  };
  auto all = connected_graphs(8);
  // Known counts of connected graphs on 1..8 vertices.
  const int known[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    if (static_cast<int>(all[n].size()) != known[n]) {
      fail(o, "enumerated " + std::to_string(all[n].size()) + " connected graphs on " +
                  std::to_string(n) + " vertices");
    }
    for (const auto& a : all[n]) check(graph_of(a));
  }
  int exhaustive = checked;
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 500; ++i) {
    int n = std::uniform_int_distribution<int>(4, 9)(rng);
    double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    check(oracle::graph_of(oracle::random_matrix(n, p, rng)));
  }
  if (o.pass) {
    o.detail = std::to_string(exhaustive) + " connected graphs n<=8 + 500 random, " +
               std::to_string(positive) + " positives verified";
  }
  return o;
}

// ---- 2: structural primitives ----

int oracle_degeneracy(const oracle::Matrix& a) {
  const int n = static_cast<int>(a.size());
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int mn = n;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      int deg = 0;
      for (int w = 0; w < n; ++w) deg += (s >> w & 1) && a[v][w];
      mn = std::min(mn, deg);
    }
    best = std::max(best, mn);
  }
  return best;
}

Outcome criterion2() {
  Outcome o;
  auto compare = [&](const Graph& g, const std::string& name) {
    auto a = oracle::matrix_of(g);
    auto og = oracle::girth(a);
    auto lg = girth(g);
    if (og != lg) fail(o, name + ": girth differs");
    if (oracle_degeneracy(a) != degeneracy_ordering(g).degeneracy) {
      fail(o, name + ": degeneracy differs");
    }
    if (oracle::connectivity(a) != vertex_connectivity(g)) {
      fail(o, name + ": connectivity differs");
    }
  };
  struct Row {
    const char* name;
    int girth, degeneracy, connectivity;
  } rows[] = {{"petersen", 5, 3, 3}, {"heawood", 6, 3, 3}, {"k5", 3, 4, 4}};
  for (const auto& r : rows) {
    Graph g = gen_named(r.name);
    if (girth(g) != r.girth || degeneracy_ordering(g).degeneracy != r.degeneracy ||
        vertex_connectivity(g) != r.connectivity) {
      fail(o, std::string(r.name) + ": expected values differ");
    }
    compare(g, r.name);
  }
  std::mt19937_64 rng(20260202);
  for (int i = 0; i < 200; ++i) {
    int n = std::uniform_int_distribution<int>(2, 12)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    compare(oracle::graph_of(oracle::random_matrix(n, p, rng)), "random #" + std::to_string(i));
  }
  if (o.pass) o.detail = "named corpus + 200 random graphs n<=12 exact";
  return o;
}

// ---- 3: unbalanced lemma ----

Outcome criterion3() {
  Outcome o;
  const auto profile = ConstantsProfile::relaxed();
  const int d = 3;
  int ok = 0;
  std::int64_t max_trials = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    RandomSource gen(seed);
    PlantedParams params;
    params.set("ratio=20");
    auto inst = gen_planted("unbalanced", params, gen, profile);
    Report report;
    try {
      auto cert = lemma_unbalanced(inst.graph, inst.roles.at("a"), inst.roles.at("b"), d,
                                   profile, RandomSource(seed).derive("criterion3", 0), &report);
      if (!oracle_certificate(inst.graph, cert, 4)) {
        fail(o, "seed " + std::to_string(seed) + ": certificate rejected");
        continue;
      }
      std::string sample = line_of(report, "lemma_unbalanced/sample");
      std::int64_t trials = std::stoll(field(sample, "trials"));
      double r = std::stod(field(sample, "|R'|"));
      double e = std::stod(field(sample, "|E(H)|"));
      max_trials = std::max(max_trials, trials);
      if (trials > 10000) fail(o, "seed " + std::to_string(seed) + ": over 10^4 trials");
      if (e < profile.aux_edge_density.at(d) * r) {
        fail(o, "seed " + std::to_string(seed) + ": density gate violated");
      }
      ++ok;
      o.digest += format_certificate(cert) + report.to_text();
    } catch (const Error& e) {
      o.digest += std::string(e.what()) + "\n";
    }
  }
  if (ok < 45) fail(o, std::to_string(ok) + "/50 certificates");
  if (o.pass) {
    o.detail = std::to_string(ok) + "/50 verified, max trials " + std::to_string(max_trials) +
               ", density gate held in every accepted trial";
  }
  return o;
}

// ---- 4: connected-good extraction ----

Outcome criterion4() {
  Outcome o;
  const auto profile = ConstantsProfile::relaxed();
  const int d = 3;
  const int k = static_cast<int>(profile.cg_connectivity.ceil_at(d));
  const auto cap = profile.cg_boundary_cap.ceil_at(d);
  int rounds = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    RandomSource gen(seed);
    auto inst = gen_planted("connectedgood", PlantedParams{}, gen, profile);
    const Graph& g = inst.graph;
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    try {
      auto r = connected_good(g, inst.roles.at("block"), d, profile);
      auto sub = induced_subgraph(g, r.h_prime);
      if (!is_k_connected(sub.graph, k)) fail(o, tag + "H' not k-connected");
      std::set<Vertex> in(r.h_prime.begin(), r.h_prime.end());
      std::set<Vertex> block(inst.roles.at("block").begin(), inst.roles.at("block").end());
      for (Vertex x : r.preserved) {
        if (!in.count(x) || !block.count(x)) fail(o, tag + "preserved vertex outside H' or b");
        int inside = 0;
        for (Vertex w : g.neighbors(x)) inside += static_cast<int>(in.count(w));
        if (inside != g.degree(x)) fail(o, tag + "degree not preserved");
      }
      double floor = profile.cg_preserved_coeff * r.h_prime.size() / g.max_degree();
      if (r.preserved.size() < floor) fail(o, tag + "too few preserved vertices");
      std::size_t s = 0, dd = 0;
      for (const auto& round : r.trace.rounds) {
        ++rounds;
        if (static_cast<std::int64_t>(round.s.size()) > cap) fail(o, tag + "boundary over cap");
        s += round.s.size();
        dd += round.d.size();
        if (dd > static_cast<std::size_t>(g.max_degree()) * s) {
          fail(o, tag + "|D| > Delta |S| in trace");
        }
      }
      o.digest += r.trace.to_text();
    } catch (const Error& e) {
      fail(o, tag + e.what());
    }
  }
  if (o.pass) {
    o.detail = "50 instances, " + std::to_string(rounds) +
               " trace rounds, all postconditions exact";
  }
  return o;
}

// ---- 5: structure invariants after sparsification ----

bool disjoint_paths(const Graph& g, const PathStructure& ps) {
  auto edges = ps.h.edges();
  std::vector<std::set<Vertex>> closed(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (Vertex x : ps.path_of.at(edges[i])) {
      closed[i].insert(x);
      for (Vertex w : g.neighbors(x)) closed[i].insert(w);
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      for (Vertex y : ps.path_of.at(edges[j])) {
        if (closed[i].count(y)) return false;
      }
    }
  }
  return true;
}

bool star_ok(const Graph& g, const PathStructure& ps, const Branchable& b) {
  std::set<Vertex> verts;
  for (Vertex u : b.witnesses) {
    Edge e{std::min(b.v, u), std::max(b.v, u)};
    for (Vertex x : ps.path_of.at(e)) verts.insert(x);
  }
  int edges = 0;
  std::map<Vertex, int> deg;
  for (Vertex x : verts) {
    for (Vertex w : g.neighbors(x)) {
      if (verts.count(w)) ++deg[x];
    }
  }
  for (auto& [x, k] : deg) edges += k;
  edges /= 2;
  if (edges != static_cast<int>(verts.size()) - 1) return false;
  if (deg[ps.s[b.v]] != static_cast<int>(b.witnesses.size())) return false;
  int leaves = 0;
  for (auto& [x, k] : deg) leaves += k == 1;
  return leaves == static_cast<int>(b.witnesses.size());
}

Outcome criterion5() {
  Outcome o;
  const auto profile = ConstantsProfile::relaxed();
  const int d = 3;
  int runs = 0, branchable = 0;
  for (std::uint64_t skeleton = 1; skeleton <= 10; ++skeleton) {
    RandomSource gen(skeleton);
    PlantedParams params;
    params.set("centers=80");
    auto inst = gen_planted("maxdegree", params, gen, profile);
    auto bd = ball_decomposition(inst.graph, inst.roles.at("u"), profile);
    auto sg = build_structure(inst.graph, bd, profile);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      ++runs;
      const std::string tag =
          "skeleton " + std::to_string(skeleton) + " seed " + std::to_string(seed) + ": ";
      RandomSource rng = RandomSource(skeleton * 1000 + seed);
      try {
        auto ps = sparsify_structure(sg, inst.graph, d, profile, rng);
        if (!check_path_structure(inst.graph, ps, profile).empty()) fail(o, tag + "checker");
        if (!disjoint_paths(inst.graph, ps)) fail(o, tag + "disjointness");
        for (const auto& b : branchable_set(ps, inst.graph, d)) {
          ++branchable;
          if (!star_ok(inst.graph, ps, b)) fail(o, tag + "branchable witness check");
        }
        o.digest += std::to_string(ps.h.num_edges()) + " ";
      } catch (const Error& e) {
        fail(o, tag + e.what());
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(runs) + " runs, 0 StructureViolation, " +
               std::to_string(branchable) + " branchable witnesses checked";
  }
  return o;
}

// ---- 6: resampling on sparse 3-SAT ----

Outcome criterion6() {
  Outcome o;
  std::int64_t worst = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed);
    // Clauses come in pairs sharing one variable; pairs are disjoint, so each
    // clause meets at most one other.
    int pairs = std::uniform_int_distribution<int>(5, 40)(rng);
    int vars = 0;
    std::vector<std::vector<int>> clauses;  // signed 1-based literals
    std::bernoulli_distribution sign(0.5);
    auto lit = [&](int v) { return sign(rng) ? v + 1 : -(v + 1); };
    for (int p = 0; p < pairs; ++p) {
      int shared = vars++;
      for (int side = 0; side < 2; ++side) {
        clauses.push_back({lit(shared), lit(vars), lit(vars + 1)});
        vars += 2;
      }
    }
    EventSystem sys;
    for (int v = 0; v < vars; ++v) sys.add_variable(0.5);
    for (const auto& c : clauses) {
      std::vector<int> scope;
      for (int l : c) scope.push_back(std::abs(l) - 1);
      sys.add_event(scope, [c](const EventSystem::Assignment& a) {
        for (int l : c) {
          if ((a[std::abs(l) - 1] != 0) == (l > 0)) return false;
        }
        return true;
      });
    }
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    if (sys.max_dependency_degree() > 1) fail(o, tag + "instance outside the regime");
    RandomSource rs(seed);
    try {
      auto r = lll_resample(sys, rs, 10LL * vars);
      worst = std::max(worst, r.resamples);
      for (const auto& c : clauses) {
        bool sat = false;
        for (int l : c) sat |= (r.assignment[std::abs(l) - 1] != 0) == (l > 0);
        if (!sat) fail(o, tag + "clause violated");
      }
      o.digest += std::to_string(r.resamples) + " ";
    } catch (const Error& e) {
      fail(o, tag + e.what());
    }
  }
  if (o.pass) o.detail = "100 instances, max resamples " + std::to_string(worst);
  return o;
}

// ---- 7: main dispatcher, both cases ----

Outcome criterion7() {
  Outcome o;
  const auto profile = ConstantsProfile::relaxed();
  struct Case {
    const char* kind;
    std::uint64_t seed;
    const char* expect_case;
    std::vector<std::string> stages;
  } cases[] = {
      {"case1", 1, "1", {"lemma_largesub/result", "theorem_main/case1/sample",
                          "theorem_main/case1/lift"}},
      {"case2", 1, "2", {"theorem_main/case2/peel", "theorem_main/case2/properties",
                          "lemma_maxdegree/lll", "lemma_maxdegree/assemble"}},
  };
  std::string detail;
  for (const auto& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    RandomSource gen(c.seed);
    auto inst = gen_planted(c.kind, PlantedParams{}, gen, profile);
    Report report;
    const std::string tag = std::string(c.kind) + ": ";
    try {
      auto cert = theorem_main(inst.graph, 3, profile, RandomSource(c.seed), &report);
      if (!oracle_certificate(inst.graph, cert, 4)) fail(o, tag + "certificate rejected");
      if (line_of(report, std::string("theorem_main/case | ") + c.expect_case).empty()) {
        fail(o, tag + "report names the wrong case");
      }
      for (const auto& s : c.stages) {
        if (line_of(report, s).empty()) fail(o, tag + "report lacks " + s);
      }
      o.digest += format_certificate(cert) + report.to_text();
    } catch (const Error& e) {
      fail(o, tag + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    detail += std::string(detail.empty() ? "" : ", ") + c.kind + " seed " +
              std::to_string(c.seed) + " (" + std::to_string(ms) + " ms)";
  }
  if (o.pass) o.detail = detail + " verified";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, const Outcome& o, double seconds) {
    std::printf("criterion %d: %s | %s [%.1fs]\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                seconds);
    std::fflush(stdout);
    failures += !o.pass;
  };
  auto timed = [](const std::function<Outcome()>& fn, double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
  };
  std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3,
                                                 criterion4, criterion5, criterion6,
                                                 criterion7};
  std::vector<std::string> digests;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    double s = 0;
    Outcome o = timed(criteria[i], s);
    digests.push_back(o.digest);
    report(static_cast<int>(i + 1), o, s);
  }
  // 8: rerun 3..7 with the same seeds.
  Outcome o8;
  double total = 0;
  for (std::size_t i = 2; i < criteria.size(); ++i) {
    double s = 0;
    Outcome again = timed(criteria[i], s);
    total += s;
    if (again.digest != digests[i]) fail(o8, "criterion " + std::to_string(i + 1) + " drifted");
  }
  if (o8.pass) o8.detail = "criteria 3-7 rerun byte-identical";
  report(8, o8, total);
  return failures == 0 ? 0 : 1;
}
