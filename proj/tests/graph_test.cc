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

#include "isub/graph.h"

#include <gtest/gtest.h>

#include <random>

#include "isub/error.h"
#include "isub/profile.h"
#include "oracles.h"

namespace isub {
namespace {

Graph petersen() { return oracle::make(10, oracle::petersen_edges()); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no isub::Error thrown";
  return ErrorKind::kInvalidInput;
}

TEST(LoadGraph, PathOnThreeVertices) {
  Graph g = load_graph("nodes 3\n0 1\n1 2");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2);
}

TEST(LoadGraph, DuplicatesCollapse) {
  Graph g = load_graph("0 1\n0 1\n1 0");
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_EQ(g.num_vertices(), 2);
}

TEST(LoadGraph, PetersenIsCubic) {
  std::string text = "# petersen\n";
  for (auto [u, v] : oracle::petersen_edges())
    text += std::to_string(u) + " " + std::to_string(v) + "\n";
  Graph g = load_graph(text);
  EXPECT_EQ(g.num_vertices(), 10);
  EXPECT_EQ(g.num_edges(), 15);
  EXPECT_EQ(g.min_degree(), 3);
  EXPECT_EQ(g.max_degree(), 3);
}

TEST(LoadGraph, Errors) {
  EXPECT_EQ(kind_of([] { load_graph("0 0\n"); }), ErrorKind::kInvalidInput);
  EXPECT_EQ(kind_of([] { load_graph("0 x\n"); }), ErrorKind::kParseError);
  EXPECT_EQ(kind_of([] { load_graph("0 1 2\n"); }), ErrorKind::kParseError);
  EXPECT_EQ(kind_of([] { load_graph("nodes 2\n0 5\n"); }), ErrorKind::kInvalidInput);
}

TEST(LoadGraph, RoundTrip) {
  Graph g = petersen();
  EXPECT_EQ(load_graph(format_graph(g)), g);
}

TEST(Girth, SmallCases) {
  EXPECT_EQ(girth(oracle::make(4, oracle::complete_edges(4))), 3);
  EXPECT_EQ(girth(oracle::make(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})), std::nullopt);
  EXPECT_EQ(girth(petersen()), 5);
  EXPECT_EQ(girth(oracle::make(6, oracle::cycle_edges(6))), 6);
}

TEST(Girth, MatchesEdgeRemovalOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 30);
    double p = (1.0 + static_cast<double>(rng() % 40) / 10.0) / n;
    auto a = oracle::random_matrix(n, p, rng);
    EXPECT_EQ(girth(oracle::graph_of(a)), oracle::girth(a)) << "trial " << trial;
  }
}

TEST(Ball, Examples) {
  Graph c6 = oracle::make(6, oracle::cycle_edges(6));
  EXPECT_EQ(ball(c6, 3, 0), VertexSet{3});
  EXPECT_EQ(ball(c6, 0, 2).size(), 5u);
  EXPECT_EQ(ball(petersen(), 4, 1).size(), 4u);
  EXPECT_EQ(kind_of([&] { ball(c6, 9, 1); }), ErrorKind::kInvalidInput);
}

TEST(Ball, MonotoneAndBounded) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = oracle::random_matrix(25, 0.12, rng);
    Graph g = oracle::graph_of(a);
    int delta = g.max_degree();
    for (int r = 0; r < 5; ++r) {
      auto inner = ball(g, 0, r), outer = ball(g, 0, r + 1);
      EXPECT_TRUE(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
      long long cap = 1, layer = delta;
      for (int i = 0; i < r; ++i) {
        cap += layer;
        layer *= std::max(1, delta - 1);
      }
      EXPECT_LE(static_cast<long long>(inner.size()), cap);
    }
  }
}

TEST(Distance, Basic) {
  Graph g = oracle::make(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(distance(g, 0, 2), 2);
  EXPECT_EQ(distance(g, 0, 0), 0);
  EXPECT_EQ(distance(g, 0, 4), std::nullopt);
}

int max_right_degree(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> pos(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) pos[order[i]] = i;
  int worst = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int right = 0;
    for (Vertex w : g.neighbors(v)) right += pos[w] > pos[v];
    worst = std::max(worst, right);
  }
  return worst;
}

TEST(Degeneracy, Examples) {
  EXPECT_EQ(degeneracy_ordering(oracle::make(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})).degeneracy, 1);
  EXPECT_EQ(degeneracy_ordering(oracle::make(5, oracle::complete_edges(5))).degeneracy, 4);
  EXPECT_EQ(degeneracy_ordering(petersen()).degeneracy, 3);
}

TEST(Degeneracy, RightDegreeAndRandomOrdersNeverBeatIt) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = oracle::random_matrix(14, 0.3, rng);
    Graph g = oracle::graph_of(a);
    auto ord = degeneracy_ordering(g);
    EXPECT_EQ(max_right_degree(g, ord.order), ord.degeneracy);
    std::vector<Vertex> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < 10000; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ASSERT_GE(max_right_degree(g, perm), ord.degeneracy);
    }
  }
}

TEST(IndependentSet, Examples) {
  Graph c5 = oracle::make(5, oracle::cycle_edges(5));
  auto s = greedy_independent_set(c5, degeneracy_ordering(c5));
  EXPECT_TRUE(is_independent(c5, s));
  EXPECT_GE(s.size(), 2u);
  Graph k4 = oracle::make(4, oracle::complete_edges(4));
  EXPECT_EQ(greedy_independent_set(k4, degeneracy_ordering(k4)).size(), 1u);
}

TEST(IndependentSet, SizeBound) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 40);
    auto a = oracle::random_matrix(n, 0.2, rng);
    Graph g = oracle::graph_of(a);
    auto ord = degeneracy_ordering(g);
    auto s = greedy_independent_set(g, ord);
    EXPECT_TRUE(is_independent(g, s));
    EXPECT_GE(static_cast<int>(s.size()) * (ord.degeneracy + 1), n);
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; v += 2) subset.push_back(v);
    auto t = greedy_independent_set(g, ord, subset);
    EXPECT_TRUE(is_independent(g, t));
    EXPECT_TRUE(std::includes(subset.begin(), subset.end(), t.begin(), t.end()));
    EXPECT_GE(t.size() * (ord.degeneracy + 1), subset.size());
  }
}

TEST(InducedSubgraph, Examples) {
  Graph p = petersen();
  std::vector<Vertex> all(10);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(induced_subgraph(p, all).graph, p);
  Graph k4 = oracle::make(4, oracle::complete_edges(4));
  EXPECT_EQ(induced_subgraph(k4, std::vector<Vertex>{0, 2, 3}).graph.num_edges(), 3);
  auto outer = induced_subgraph(p, std::vector<Vertex>{0, 1, 2, 3, 4});
  EXPECT_EQ(outer.graph, oracle::make(5, oracle::cycle_edges(5)));
  EXPECT_EQ(outer.from_host[7], -1);
  EXPECT_EQ(outer.to_host[3], 3);
}

TEST(MooreFloor, Examples) {
  EXPECT_EQ(moore_floor(3, 5).bound, 10u);
  EXPECT_EQ(moore_floor(3, 3).bound, 4u);
  EXPECT_EQ(moore_floor(3, 5).advisory, 16u);
  EXPECT_EQ(moore_floor(3, 6).bound, 14u);  // Heawood graph
  EXPECT_EQ(moore_floor(3, 4).bound, 6u);   // K_{3,3}
  EXPECT_EQ(kind_of([] { moore_floor(2, 5); }), ErrorKind::kInvalidInput);
}

TEST(MooreFloor, NeverExceedsVertexCount) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 4 + static_cast<int>(rng() % 20);
    auto a = oracle::random_matrix(n, 0.35, rng);
    Graph g = oracle::graph_of(a);
    auto gir = girth(g);
    int d = g.min_degree();
    if (!gir || d < 3) continue;
    ++checked;
    EXPECT_LE(moore_floor(d, *gir).bound, static_cast<std::uint64_t>(n));
  }
  EXPECT_LE(moore_floor(3, 5).bound, 10u);
  EXPECT_GT(checked, 10);
}

TEST(Components, Basic) {
  Graph g = oracle::make(6, {{0, 1}, {2, 3}, {3, 4}});
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (VertexSet{0, 1}));
  EXPECT_EQ(comps[1], (VertexSet{2, 3, 4}));
  EXPECT_EQ(comps[2], (VertexSet{5}));
}

TEST(Graph, HandshakeAndSymmetry) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_matrix(20, 0.2, rng);
    Graph g = oracle::graph_of(a);
    long long sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.has_edge(w, v));
    }
    EXPECT_EQ(sum, 2 * g.num_edges());
  }
}

TEST(Profile, FullDefaults) {
  auto p = ConstantsProfile::full();
  EXPECT_EQ(p.unbalanced_ratio.coeff, 1e5);
  EXPECT_EQ(p.unbalanced_ratio.exponent, 4);
  EXPECT_DOUBLE_EQ(p.unbalanced_sample_p.at(3), 1.0 / 30.0);
  EXPECT_DOUBLE_EQ(p.sparsify_p.at(2), std::pow(2.0, -36));
  EXPECT_EQ(p.ball_radius, 50);
  EXPECT_EQ(p.ball_separation, 101);
  EXPECT_DOUBLE_EQ(p.case1_sample_p.at(2), 1.0 / 256.0);
  EXPECT_EQ(p.high_degree.ceil_at(2), 1LL << 35);
}

TEST(Profile, ScaledMapsExponent35To3) {
  auto p = ConstantsProfile::scaled(3.0 / 35.0);
  EXPECT_EQ(p.high_degree.exponent, 3);
  EXPECT_EQ(p.sparsify_p.exponent, -3);
}

TEST(Profile, OverridesAndText) {
  auto p = ConstantsProfile::relaxed();
  p.set("ball_radius=2");
  p.set("high_degree=2:3");
  EXPECT_EQ(p.ball_radius, 2);
  EXPECT_EQ(p.high_degree, (Threshold{2, 3}));
  EXPECT_EQ(kind_of([&] { p.set("nope=1"); }), ErrorKind::kInvalidInput);
  EXPECT_NE(p.to_text().find("high_degree = 2:3"), std::string::npos);
  EXPECT_EQ(ConstantsProfile::by_name("relaxed").name, "relaxed");
}

TEST(Profile, ProbabilitiesValid) {
  for (auto p : {ConstantsProfile::full(), ConstantsProfile::relaxed()}) {
    for (int d = 3; d <= 6; ++d) {
      for (auto t : {p.unbalanced_sample_p, p.sparsify_p, p.case1_sample_p}) {
        EXPECT_GT(t.at(d), 0.0);
        EXPECT_LE(t.at(d), 1.0);
      }
    }
  }
}

}  // namespace
}  // namespace isub
