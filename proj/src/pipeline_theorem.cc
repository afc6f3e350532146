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
#include <map>
#include <optional>

#include "isub/pipeline.h"
#include "isub/subdivision.h"
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

SubdivisionCertificate map_certificate(const SubdivisionCertificate& c,
                                       std::span<const Vertex> to_host) {
  SubdivisionCertificate out;
  for (Vertex v : c.branch) out.branch.push_back(to_host[v]);
  for (const auto& [k, p] : c.paths) {
    Path q;
    for (Vertex v : p) q.push_back(to_host[v]);
    out.paths[k] = std::move(q);
  }
  return out;
}

struct Case1Trial {
  Case1Sample sample;
  std::vector<Edge> aux_edges;           // local ids into r_b
  std::map<Edge, Vertex> link;           // aux edge -> good y realising it
  double margin = 0.0;                   // |E(H)| - floor
  std::optional<SubdivisionCertificate> aux_cert;
};

}  // namespace

std::string check_case1_sample(const Graph& g, const Case1Sample& s) {
  if (!is_independent(g, s.r_b)) return "r_b is not independent";
  if (!is_independent(g, s.r_x)) return "r_x is not independent";
  auto in_rb = mask_of(g.num_vertices(), s.r_b);
  auto in_rx = mask_of(g.num_vertices(), s.r_x);
  for (Vertex x : s.r_x) {
    auto it = s.b_of.find(x);
    if (it == s.b_of.end() || !in_rb[it->second] || !g.has_edge(x, it->second)) {
      return kv("r_x vertex ", x, " has no sampled hub");
    }
  }
  for (Vertex y : s.good) {
    if (count_into(g, y, in_rx) != 2) return kv("good vertex ", y, " lacks two r_x neighbours");
    if (count_into(g, y, in_rb) != 0) return kv("good vertex ", y, " touches r_b");
  }
  return "";
}

SubdivisionCertificate theorem_main(const Graph& g, int d, const ConstantsProfile& profile,
                                    const RandomSource& rng, Report* report) {
  const std::string stage = "theorem_main";
  auto min_deg = profile.theorem_min_degree.ceil_at(d);
  require(g.num_vertices() > 0 && g.min_degree() >= min_deg, stage,
          kv("min degree ", g.min_degree(), " below ", min_deg));
  auto gi = girth(g);
  require(!gi || *gi >= profile.theorem_girth, stage,
          kv("girth ", gi.value_or(0), " below ", profile.theorem_girth));

  // Work inside the max core; every certificate is mapped back and
  // re-verified against g itself.
  auto core = induced_subgraph(g, max_core(g));
  const Graph& g0 = core.graph;
  const int n = g0.num_vertices();
  auto finish = [&](const SubdivisionCertificate& local, std::string_view via) {
    auto cert = map_certificate(local, core.to_host);
    detail::require_induced(g, cert, stage);
    note(report, stage + "/certificate",
         kv("via=", via, " order=", cert.order(), " vertices=", cert.vertices().size()));
    return cert;
  };
  double high = profile.high_degree.at(d);
  VertexSet b;
  for (Vertex v = 0; v < n; ++v) {
    if (g0.degree(v) >= high) b.push_back(v);
  }
  auto in_b = mask_of(n, b);
  VertexSet a, a1;
  for (Vertex v = 0; v < n; ++v) {
    if (in_b[v]) continue;
    int c = count_into(g0, v, in_b);
    if (c >= 2) a.push_back(v);
    if (c == 1) a1.push_back(v);
  }
  note(report, stage,
       kv("d=", d, " n=", g.num_vertices(), " core=", n, " degeneracy=",
          degeneracy_ordering(g0).degeneracy, " |B|=", b.size(), " |A|=", a.size(),
          " |A'|=", a1.size(), " high=", high));

  double ratio = profile.unbalanced_ratio.at(d);
  if (!a.empty() && a.size() >= ratio * b.size()) {
    note(report, stage + "/case", "unbalanced");
    auto cert = detail::at_stage(stage + "/unbalanced", [&] {
      return lemma_unbalanced(g0, a, b, d, profile, rng.derive("theorem_main", 1), report);
    });
    return finish(cert, "unbalanced");
  }

  if (a1.size() >= profile.case1_fraction * n) {
    const std::string s1 = stage + "/case1";
    note(report, stage + "/case", "1");
    LargesubResult ls;
    try {
      ls = detail::at_stage(s1 + "/largesub", [&] {
        return lemma_largesub(g0, a1, d, profile, rng.derive("theorem_main", 2), report);
      });
    } catch (const EarlySuccess& e) {
      note(report, s1 + "/largesub", "early success");
      return finish(e.certificate, "largesub");
    }
    auto in_a = mask_of(n, a);
    auto in_xp = mask_of(n, ls.x_prime);
    std::map<Vertex, Vertex> b_of;
    for (Vertex x : ls.x_prime) {
      for (Vertex w : g0.neighbors(x)) {
        if (in_b[w]) b_of[x] = w;
      }
    }
    // Y' keeps links whose X'-neighbourhoods are pairwise disjoint.
    std::vector<char> claimed(n, 0);
    VertexSet y_prime;
    for (Vertex y : ls.y) {
      if (in_a[y] || in_b[y]) continue;
      bool free = true;
      for (Vertex w : g0.neighbors(y)) {
        if (in_xp[w] && claimed[w]) free = false;
      }
      if (!free) continue;
      y_prime.push_back(y);
      for (Vertex w : g0.neighbors(y)) {
        if (in_xp[w]) claimed[w] = 1;
      }
    }
    double p = std::min(1.0, profile.case1_sample_p.at(d));
    double floor = profile.case1_good_floor.at(d) * n;
    auto ord = degeneracy_ordering(g0);
    note(report, s1 + "/links",
         kv("|X'|=", ls.x_prime.size(), " |Y|=", ls.y.size(), " |Y'|=", y_prime.size(),
            " p=", p, " floor=", floor));

    std::function<Case1Trial(RandomSource&)> sampler = [&](RandomSource& rs) {
      Case1Trial t;
      t.sample.r_b = right_neighbor_prune(bernoulli_subset(b, p, rs), ord, g0);
      auto in_rb = mask_of(n, t.sample.r_b);
      VertexSet rx0 = bernoulli_subset(ls.x_prime, p, rs);
      VertexSet filtered;
      for (Vertex x : rx0) {
        if (in_rb[b_of.at(x)]) filtered.push_back(x);
      }
      t.sample.r_x = right_neighbor_prune(filtered, ord, g0);
      for (Vertex x : t.sample.r_x) t.sample.b_of[x] = b_of.at(x);
      auto in_rx = mask_of(n, t.sample.r_x);
      std::vector<int> local(n, -1);
      for (std::size_t i = 0; i < t.sample.r_b.size(); ++i) {
        local[t.sample.r_b[i]] = static_cast<int>(i);
      }
      for (Vertex y : y_prime) {
        if (count_into(g0, y, in_rb) != 0) continue;
        std::vector<Vertex> xs;
        for (Vertex w : g0.neighbors(y)) {
          if (in_rx[w]) xs.push_back(w);
        }
        if (xs.size() != 2) continue;
        t.sample.good.push_back(y);
        int i = local[b_of.at(xs[0])];
        int j = local[b_of.at(xs[1])];
        if (i == j) continue;
        Edge e{std::min(i, j), std::max(i, j)};
        if (t.link.emplace(e, y).second) t.aux_edges.push_back(e);
      }
      t.margin = static_cast<double>(t.aux_edges.size()) - floor;
      if (t.margin >= 0.0 && static_cast<int>(t.sample.r_b.size()) >= d + 1) {
        Graph h(static_cast<int>(t.sample.r_b.size()), t.aux_edges);
        try {
          t.aux_cert = find_subdivision(h, d, profile);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kNotFound && e.kind() != ErrorKind::kHypothesisNotMet &&
              e.kind() != ErrorKind::kBudgetExhausted) {
            throw;
          }
        }
      }
      return t;
    };
    std::function<double(const Case1Trial&)> score = [](const Case1Trial& t) {
      return t.aux_cert ? t.margin : std::min(t.margin, 0.0) - 1.0;
    };
    auto result = detail::at_stage(s1 + "/sample", [&] {
      return retry_expectation<Case1Trial>(sampler, score, 0.0, profile.max_trials,
                                           rng.derive("theorem_main", 3), "case1");
    });
    const Case1Trial& t = result.value;
    std::string bad = check_case1_sample(g0, t.sample);
    if (!bad.empty()) throw Error(ErrorKind::kStructureViolation, s1 + "/sample: " + bad);
    note(report, s1 + "/sample",
         kv("trials=", result.trials, " |R_B|=", t.sample.r_b.size(), " |R_X'|=",
            t.sample.r_x.size(), " good=", t.sample.good.size(), " |E(H)|=",
            t.aux_edges.size()));

    Graph h(static_cast<int>(t.sample.r_b.size()), t.aux_edges);
    EdgeRealization realization;
    for (const auto& [e, y] : t.link) {
      Vertex b1 = t.sample.r_b[e.first];
      Vertex b2 = t.sample.r_b[e.second];
      Vertex x1 = -1, x2 = -1;
      for (Vertex w : g0.neighbors(y)) {
        auto it = t.sample.b_of.find(w);
        if (it == t.sample.b_of.end()) continue;
        if (it->second == b1) x1 = w;
        if (it->second == b2) x2 = w;
      }
      realization[e] = {b1, x1, y, x2, b2};
    }
    auto local_cert = detail::at_stage(s1 + "/lift", [&] {
      return lift_subdivision(g0, h, t.sample.r_b, *t.aux_cert, realization);
    });
    note(report, s1 + "/lift", kv("aux_order=", t.aux_cert->order(), " subdivision=3"));
    return finish(local_cert, "case1");
  }

  const std::string s2 = stage + "/case2";
  note(report, stage + "/case", "2");
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_b[v]) rest.push_back(v);
  }
  auto peel_deg = static_cast<int>(profile.case2_peel_degree.ceil_at(d));
  auto peeled = peel_to_min_degree(g0, rest, peel_deg);
  double peel_bound = profile.case2_peel_claim.at(d) * a.size();
  note(report, s2 + "/peel",
       kv("|G'|=", rest.size(), " threshold=", peel_deg, " |S|=", peeled.deletion_order.size(),
          " peel_bound=", peel_bound));
  if (!peeled.deletion_order.empty() && peeled.deletion_order.size() >= peel_bound) {
    // Too many peeled vertices: they lean on A, which is then dense enough.
    auto in_a = mask_of(n, a);
    VertexSet big;
    for (Vertex v : peeled.deletion_order) {
      if (!in_a[v] && count_into(g0, v, in_a) >= 2) big.push_back(v);
    }
    note(report, s2 + "/peel-escape", kv("escape |S\\A with 2 A-neighbours|=", big.size()));
    auto cert = detail::at_stage(s2 + "/peel-escape", [&] {
      return lemma_unbalanced(g0, big, a, d, profile, rng.derive("theorem_main", 4), report);
    });
    return finish(cert, "case2-peel-escape");
  }

  auto inner = induced_subgraph(g0, peeled.core);
  const Graph& g2 = inner.graph;
  require(g2.num_vertices() > 0, s2, "peeling removed every vertex");
  double cap = profile.maxdeg_delta_cap.at(d);
  require(g2.max_degree() <= cap, s2 + "/property-i",
          kv("max degree ", g2.max_degree(), " above ", cap));
  require(g2.min_degree() >= peel_deg, s2 + "/property-ii",
          kv("min degree ", g2.min_degree(), " below ", peel_deg));
  auto g2_girth = girth(g2);
  require(!g2_girth || *g2_girth >= profile.maxdeg_girth, s2 + "/property-iv",
          kv("girth ", g2_girth.value_or(0), " below ", profile.maxdeg_girth));
  auto u_deg = profile.maxdeg_u_degree.ceil_at(d);
  VertexSet u;
  for (Vertex v = 0; v < g2.num_vertices(); ++v) {
    if (g2.degree(v) >= u_deg) u.push_back(v);
  }
  note(report, s2 + "/properties",
       kv("n''=", g2.num_vertices(), " max_degree=", g2.max_degree(), " min_degree=",
          g2.min_degree(), " |U|=", u.size(), " (iii) ", u.size() * 6 >= static_cast<std::size_t>(n)
                                                             ? "holds" : "fails"));
  auto local = detail::at_stage(s2 + "/maxdegree", [&] {
    return lemma_maxdegree(g2, u, d, profile, rng.derive("theorem_main", 5), report);
  });
  return finish(map_certificate(local, inner.to_host), "case2");
}

}  // namespace isub
