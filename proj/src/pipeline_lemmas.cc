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

void Report::add(std::string_view stage, std::string_view detail) {
  std::string line(stage);
  if (!detail.empty()) line += " | " + std::string(detail);
  lines_.push_back(std::move(line));
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& l : lines_) out += l + '\n';
  return out;
}

namespace detail {

void require_induced(const Graph& g, const SubdivisionCertificate& c, std::string_view stage) {
  auto rep = verify_induced_subdivision(g, c);
  if (!rep.valid_induced) {
    std::string what = rep.violations.empty() ? "unknown" : rep.violations.front().kind;
    throw Error(ErrorKind::kStructureViolation,
                std::string(stage) + ": certificate is not an induced subdivision (" + what + ")");
  }
}

}  // namespace detail

namespace {

void note(Report* report, std::string_view stage, const std::string& detail) {
  if (report) report->add(stage, detail);
}

struct UnbalancedTrial {
  VertexSet r;
  std::vector<Edge> aux_edges;               // local ids into r
  std::map<Edge, Vertex> connector;          // local edge -> host connector
  double gate = 0.0;                          // |E(H)| - density * |R'|
  std::optional<SubdivisionCertificate> aux_cert;
};

}  // namespace

SubdivisionCertificate lemma_unbalanced(const Graph& g, std::span<const Vertex> a_in,
                                        std::span<const Vertex> b_in, int d,
                                        const ConstantsProfile& profile,
                                        const RandomSource& rng, Report* report) {
  const std::string stage = "lemma_unbalanced";
  detail::check_ids(g, a_in, stage);
  detail::check_ids(g, b_in, stage);
  VertexSet a = make_vertex_set({a_in.begin(), a_in.end()});
  VertexSet b = make_vertex_set({b_in.begin(), b_in.end()});
  const int n = g.num_vertices();
  auto in_b = mask_of(n, b);
  for (Vertex v : a) {
    if (in_b[v]) throw Error(ErrorKind::kInvalidInput, stage + ": a and b intersect");
  }

  auto ord = degeneracy_ordering(g);
  double degen_cap = profile.degeneracy_cap.at(d);
  require(ord.degeneracy <= degen_cap, stage,
          kv("degeneracy ", ord.degeneracy, " exceeds ", degen_cap));
  auto gi = girth(g);
  require(!gi || *gi >= profile.unbalanced_girth, stage,
          kv("girth ", gi.value_or(0), " below ", profile.unbalanced_girth));
  double ratio = profile.unbalanced_ratio.at(d);
  require(!a.empty() && a.size() >= ratio * b.size(), stage,
          kv("|a| = ", a.size(), " below ", ratio, " * |b| = ", ratio * b.size()));
  for (Vertex v : a) {
    require(count_into(g, v, in_b) >= 2, stage,
            kv("a-vertex ", v, " has fewer than 2 b-neighbours"));
  }

  VertexSet a1 = greedy_independent_set(g, ord, a);
  double cap = profile.unbalanced_b_degree_cap.at(d);
  VertexSet a2;
  for (Vertex v : a1) {
    if (count_into(g, v, in_b) <= cap) a2.push_back(v);
  }
  double p = std::min(1.0, profile.unbalanced_sample_p.at(d));
  double density = profile.aux_edge_density.at(d);
  note(report, stage,
       kv("d=", d, " |A|=", a.size(), " |B|=", b.size(), " |A'|=", a1.size(), " |A''|=",
          a2.size(), " p=", p, " density=", density));

  std::function<UnbalancedTrial(RandomSource&)> sampler = [&](RandomSource& rs) {
    UnbalancedTrial t;
    VertexSet r0 = bernoulli_subset(b, p, rs);
    t.r = right_neighbor_prune(r0, ord, g);
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < t.r.size(); ++i) local[t.r[i]] = static_cast<int>(i);
    for (Vertex y : a2) {
      std::vector<int> hit;
      for (Vertex w : g.neighbors(y)) {
        if (local[w] >= 0) hit.push_back(local[w]);
      }
      if (hit.size() != 2) continue;
      Edge e{std::min(hit[0], hit[1]), std::max(hit[0], hit[1])};
      // a second connector for the same pair would close a 4-cycle
      if (t.connector.emplace(e, y).second) t.aux_edges.push_back(e);
    }
    t.gate = static_cast<double>(t.aux_edges.size()) - density * t.r.size();
    if (t.gate >= 0.0 && static_cast<int>(t.r.size()) >= d + 1) {
      Graph h(static_cast<int>(t.r.size()), t.aux_edges);
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
  std::function<double(const UnbalancedTrial&)> score = [](const UnbalancedTrial& t) {
    return t.aux_cert ? t.gate : std::min(t.gate, 0.0) - 1.0;
  };
  auto result = detail::at_stage(stage + "/sample", [&] {
    return retry_expectation<UnbalancedTrial>(sampler, score, 0.0, profile.max_trials, rng,
                                              "lemma_unbalanced");
  });
  const UnbalancedTrial& t = result.value;
  note(report, stage + "/sample",
       kv("trials=", result.trials, " |R'|=", t.r.size(), " |E(H)|=", t.aux_edges.size(),
          " floor=", density * t.r.size()));

  Graph h(static_cast<int>(t.r.size()), t.aux_edges);
  EdgeRealization realization;
  for (const auto& [e, y] : t.connector) {
    realization[e] = {t.r[e.first], y, t.r[e.second]};
  }
  auto cert = detail::at_stage(stage + "/lift", [&] {
    return lift_subdivision(g, h, t.r, *t.aux_cert, realization);
  });
  detail::require_induced(g, cert, stage);
  note(report, stage + "/certificate",
       kv("order=", cert.order(), " vertices=", cert.vertices().size()));
  return cert;
}

std::string check_largesub(const Graph& g, std::span<const Vertex> x, const LargesubResult& r,
                           int d, const ConstantsProfile& profile) {
  const int n = g.num_vertices();
  auto in_x = mask_of(n, x);
  auto in_xp = mask_of(n, r.x_prime);
  for (Vertex v : r.x_prime) {
    if (!in_x[v]) return kv("x' vertex ", v, " is not in x");
  }
  for (Vertex v : r.y) {
    if (in_xp[v]) return kv("vertex ", v, " is in both x' and y");
  }
  double floor = profile.largesub_y_floor.at(d) * n;
  if (r.y.size() < floor) return kv("|y| = ", r.y.size(), " below ", floor);
  if (!is_independent(g, r.y)) return "y is not independent";
  double cap = profile.largesub_u_degree_cap.at(d);
  for (Vertex v : r.y) {
    int c = count_into(g, v, in_xp);
    if (c < 2 || c > cap) return kv("y vertex ", v, " has ", c, " neighbours in x'");
  }
  double zcap = profile.largesub_z_degree_cap.at(d);
  for (Vertex v : r.x_prime) {
    if (g.degree(v) > zcap) return kv("x' vertex ", v, " has degree ", g.degree(v));
  }
  return "";
}

LargesubResult lemma_largesub(const Graph& g, std::span<const Vertex> x_in, int d,
                              const ConstantsProfile& profile, const RandomSource& rng,
                              Report* report) {
  const std::string stage = "lemma_largesub";
  detail::check_ids(g, x_in, stage);
  VertexSet x = make_vertex_set({x_in.begin(), x_in.end()});
  const int n = g.num_vertices();

  auto ord = degeneracy_ordering(g);
  double degen_cap = profile.degeneracy_cap.at(d);
  require(ord.degeneracy <= degen_cap, stage,
          kv("degeneracy ", ord.degeneracy, " exceeds ", degen_cap));
  auto gi = girth(g);
  require(!gi || *gi >= profile.unbalanced_girth, stage,
          kv("girth ", gi.value_or(0), " below ", profile.unbalanced_girth));
  require(x.size() >= profile.largesub_x_fraction * n, stage,
          kv("|x| = ", x.size(), " below ", profile.largesub_x_fraction, " n"));
  auto min_deg = profile.largesub_min_degree.ceil_at(d);
  for (Vertex v : x) {
    require(g.degree(v) >= min_deg, stage,
            kv("x-vertex ", v, " has degree ", g.degree(v), " < ", min_deg));
  }

  double zcap = profile.largesub_z_degree_cap.at(d);
  VertexSet z;
  for (Vertex v : x) {
    if (g.degree(v) <= zcap) z.push_back(v);
  }
  double cut_floor = profile.largesub_cut_floor.at(d) * n;
  std::function<VertexSet(RandomSource&)> sampler = [&](RandomSource& rs) {
    return bernoulli_subset(z, 0.5, rs);
  };
  std::function<double(const VertexSet&)> cut = [&](const VertexSet& z1) {
    auto in = mask_of(n, z1);
    double c = 0;
    for (Vertex v : z1) c += g.degree(v) - count_into(g, v, in);
    return c;
  };
  auto halving = detail::at_stage(stage + "/halve", [&] {
    return retry_expectation<VertexSet>(sampler, cut, cut_floor, profile.max_trials, rng,
                                        "lemma_largesub");
  });
  const VertexSet& z1 = halving.value;
  auto in_z1 = mask_of(n, z1);

  double ucap = profile.largesub_u_degree_cap.at(d);
  VertexSet u, u_prime, u_rest;
  for (Vertex v = 0; v < n; ++v) {
    if (in_z1[v]) continue;
    int c = count_into(g, v, in_z1);
    if (c < 2) continue;
    u.push_back(v);
    (c > ucap ? u_prime : u_rest).push_back(v);
  }
  double small = profile.largesub_small_u.at(d) * n;
  note(report, stage,
       kv("d=", d, " |X|=", x.size(), " |Z|=", z.size(), " |Z1|=", z1.size(),
          " trials=", halving.trials, " cut=", cut(z1), " floor=", cut_floor, " |U|=", u.size(),
          " |U'|=", u_prime.size(), " |U\\U'|=", u_rest.size()));

  if (u_rest.size() <= small) {
    // U' is huge compared with what Z1 can feed: Z1 against U' is unbalanced.
    auto in_up = mask_of(n, u_prime);
    VertexSet a;
    for (Vertex v : z1) {
      if (count_into(g, v, in_up) >= 2) a.push_back(v);
    }
    note(report, stage + "/unbalanced",
         kv("|U\\U'|=", u_rest.size(), " <= ", small, " |A|=", a.size(), " |B|=",
            u_prime.size()));
    auto cert = detail::at_stage(stage + "/unbalanced", [&] {
      return lemma_unbalanced(g, a, u_prime, d, profile, rng.derive("lemma_largesub", 0),
                              report);
    });
    throw EarlySuccess(stage + ": unbalanced branch found an induced subdivision",
                       std::move(cert));
  }

  LargesubResult result;
  result.x_prime = z1;
  result.y = greedy_independent_set(g, ord, u_rest);
  double y_floor = profile.largesub_y_floor.at(d) * n;
  if (result.y.size() < y_floor) {
    throw Error(ErrorKind::kNotFound,
                kv(stage, ": |Y| = ", result.y.size(), " below ", y_floor));
  }
  std::string bad = check_largesub(g, x, result, d, profile);
  if (!bad.empty()) throw Error(ErrorKind::kStructureViolation, stage + ": " + bad);
  note(report, stage + "/result", kv("|X'|=", result.x_prime.size(), " |Y|=", result.y.size()));
  return result;
}

}  // namespace isub
