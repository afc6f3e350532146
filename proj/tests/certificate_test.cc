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

#include "isub/certificate.h"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "isub/error.h"
#include "oracles.h"

namespace isub {
namespace {

constexpr std::int64_t kBudget = 50'000'000;

SubdivisionCertificate clique_cert(std::vector<Vertex> branch) {
  SubdivisionCertificate c;
  c.branch = branch;
  for (int i = 0; i < c.order(); ++i)
    for (int j = i + 1; j < c.order(); ++j) c.paths[{i, j}] = {branch[i], branch[j]};
  return c;
}

// Natural certificate of oracle::subdivided_k4().
SubdivisionCertificate subdivided_k4_cert() {
  SubdivisionCertificate c;
  c.branch = {0, 1, 2, 3};
  int k = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) c.paths[{i, j}] = {i, k++, j};
  return c;
}

bool has_kind(const VerificationReport& r, const std::string& kind) {
  for (const auto& v : r.violations)
    if (v.kind == kind) return true;
  return false;
}

TEST(Verify, CliqueIsItsOwnSubdivision) {
  Graph k4 = oracle::make(4, oracle::complete_edges(4));
  auto r = verify_subdivision(k4, clique_cert({0, 1, 2, 3}));
  EXPECT_TRUE(r.valid_plain);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Verify, PathOverlap) {
  Graph g = oracle::subdivided_k4();
  auto c = subdivided_k4_cert();
  c.paths[{0, 1}] = {0, 5, 1};  // 5 already subdivides {0,2}
  Graph host = oracle::make(10, [] {
    auto e = oracle::subdivided_k4().edges();
    e.emplace_back(1, 5);
    return std::vector<std::pair<int, int>>(e.begin(), e.end());
  }());
  auto r = verify_subdivision(host, c);
  EXPECT_FALSE(r.valid_plain);
  EXPECT_TRUE(has_kind(r, "path-overlap"));
}

TEST(Verify, SubdividedK4) {
  Graph g = oracle::subdivided_k4();
  EXPECT_TRUE(verify_subdivision(g, subdivided_k4_cert()).valid_plain);
  auto r = verify_induced_subdivision(g, subdivided_k4_cert());
  EXPECT_TRUE(r.valid_plain);
  EXPECT_TRUE(r.valid_induced);
}

TEST(Verify, InducedK4InK5) {
  Graph k5 = oracle::make(5, oracle::complete_edges(5));
  auto r = verify_induced_subdivision(k5, clique_cert({0, 1, 2, 4}));
  EXPECT_TRUE(r.valid_plain);
  EXPECT_TRUE(r.valid_induced);
}

TEST(Verify, PlantedChord) {
  Graph g = oracle::subdivided_k4(/*chord=*/true);
  auto r = verify_induced_subdivision(g, subdivided_k4_cert());
  EXPECT_TRUE(r.valid_plain);
  EXPECT_FALSE(r.valid_induced);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, "extra-edge");
  EXPECT_EQ(r.violations[0].witness, (std::vector<Vertex>{4, 9}));
}

TEST(Verify, Malformed) {
  Graph k4 = oracle::make(4, oracle::complete_edges(4));
  auto c = clique_cert({0, 1, 2, 3});
  c.paths.erase({1, 3});
  EXPECT_TRUE(has_kind(verify_subdivision(k4, c), "missing-path"));
  c = clique_cert({0, 1, 2, 2});
  EXPECT_TRUE(has_kind(verify_subdivision(k4, c), "duplicate-branch"));
  Graph c4 = oracle::make(4, oracle::cycle_edges(4));
  c = clique_cert({0, 1, 2});
  EXPECT_TRUE(has_kind(verify_subdivision(c4, c), "non-edge"));
  c.paths[{0, 2}] = {0, 3, 2};
  EXPECT_TRUE(verify_subdivision(c4, c).valid_plain);
  c.paths[{0, 2}] = {0, 3, 1, 2};
  EXPECT_TRUE(has_kind(verify_subdivision(c4, c), "branch-on-path"));
}

TEST(Verify, FlagsAreConsistent) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_matrix(8, 0.5, rng);
    Graph g = oracle::graph_of(a);
    auto found = brute_force_plain(g, 4, kBudget);
    if (!found) continue;
    auto r = verify_induced_subdivision(g, *found);
    EXPECT_TRUE(r.valid_plain);
    EXPECT_EQ(r.valid_induced, r.violations.empty());
    if (r.valid_induced) {
      EXPECT_TRUE(oracle::is_induced_kt_subdivision(
          a, [&] {
            std::uint32_t m = 0;
            for (Vertex v : found->vertices()) m |= 1u << v;
            return m;
          }(), 4));
    }
  }
}

TEST(Format, RoundTrip) {
  auto c = subdivided_k4_cert();
  std::string text = format_certificate(c);
  EXPECT_EQ(text.substr(0, 19), "branch 4: 0 1 2 3\np");
  EXPECT_NE(text.find("path 1 2: 0 4 1\n"), std::string::npos);
  EXPECT_EQ(parse_certificate(text), c);
  EXPECT_THROW(parse_certificate("path 1 2: 0 1\n"), Error);
  EXPECT_THROW(parse_certificate("branch 2: 0\n"), Error);
}

TEST(BruteForce, Examples) {
  auto k4 = brute_force_induced(oracle::make(4, oracle::complete_edges(4)), 4, kBudget);
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->branch, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(brute_force_induced(oracle::make(9, oracle::cycle_edges(9)), 4, kBudget));
  Graph p = oracle::make(10, oracle::petersen_edges());
  auto pc = brute_force_induced(p, 4, kBudget);
  ASSERT_TRUE(pc);
  EXPECT_TRUE(verify_induced_subdivision(p, *pc).valid_induced);
}

TEST(BruteForce, Budget) {
  Graph p = oracle::make(10, oracle::petersen_edges());
  try {
    brute_force_induced(p, 4, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudgetExhausted);
  }
  EXPECT_THROW(brute_force_induced(p, 1, 10), Error);
}

TEST(BruteForce, SmallTCases) {
  Graph c5 = oracle::make(5, oracle::cycle_edges(5));
  auto tri = brute_force_induced(c5, 3, kBudget);
  ASSERT_TRUE(tri);
  EXPECT_TRUE(verify_induced_subdivision(c5, *tri).valid_induced);
  EXPECT_TRUE(brute_force_induced(oracle::make(2, {{0, 1}}), 2, kBudget));
  EXPECT_FALSE(brute_force_induced(oracle::make(3, {{0, 1}, {1, 2}}), 3, kBudget));
}

TEST(BruteForce, AgreesWithSubsetEnumerator) {
  std::mt19937_64 rng(1234);
  int positives = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    double p = 0.25 + static_cast<double>(rng() % 50) / 100.0;
    auto a = oracle::random_matrix(n, p, rng);
    Graph g = oracle::graph_of(a);
    auto found = brute_force_induced(g, 4, kBudget);
    bool expected = oracle::has_induced_kt_subdivision(a, 4);
    ASSERT_EQ(found.has_value(), expected) << format_graph(g);
    if (found) {
      ++positives;
      EXPECT_TRUE(verify_induced_subdivision(g, *found).valid_induced);
    }
  }
  EXPECT_GT(positives, 50);
}

TEST(BruteForce, PlainAgreesWithReduction) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 4 + static_cast<int>(rng() % 8);
    auto a = oracle::random_matrix(n, 0.3, rng);
    Graph g = oracle::graph_of(a);
    auto found = brute_force_plain(g, 4, kBudget);
    ASSERT_EQ(found.has_value(), oracle::has_k4_subdivision(a)) << format_graph(g);
    if (found) EXPECT_TRUE(verify_subdivision(g, *found).valid_plain);
  }
}

TEST(Lift, IdentityIsIdentity) {
  Graph g = oracle::subdivided_k4();
  auto c = subdivided_k4_cert();
  EdgeRealization id;
  for (auto [u, v] : g.edges()) id[{u, v}] = {u, v};
  std::vector<Vertex> map(g.num_vertices());
  std::iota(map.begin(), map.end(), 0);
  EXPECT_EQ(lift_subdivision(g, g, map, c, id), c);
}

TEST(Lift, ThreeSubdivision) {
  // Aux K4 on 0..3; host replaces every aux edge z1z2 by z1-x-y-w-z2.
  std::vector<std::pair<int, int>> e;
  EdgeRealization real;
  int next = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      int x = next++, y = next++, w = next++;
      e.insert(e.end(), {{i, x}, {x, y}, {y, w}, {w, j}});
      real[{i, j}] = {i, x, y, w, j};
    }
  Graph host = oracle::make(next, e);
  Graph aux = oracle::make(4, oracle::complete_edges(4));
  auto lifted = lift_subdivision(host, aux, std::vector<Vertex>{0, 1, 2, 3},
                                 clique_cert({0, 1, 2, 3}), real);
  auto r = verify_induced_subdivision(host, lifted);
  EXPECT_TRUE(r.valid_induced);
  EXPECT_EQ(lifted.paths.at({0, 1}), (Path{0, 4, 5, 6, 1}));
}

TEST(Lift, SharedRealizationVertexConflicts) {
  // Aux path 0-1-2; both aux edges routed through host vertex 3.
  Graph host = oracle::make(4, {{0, 3}, {3, 1}, {1, 2}, {2, 3}});
  Graph aux = oracle::make(3, {{0, 1}, {1, 2}, {0, 2}});
  EdgeRealization real{{{0, 1}, {0, 3, 1}}, {{1, 2}, {1, 3, 2}}, {{0, 2}, {0, 3, 2}}};
  try {
    lift_subdivision(host, aux, std::vector<Vertex>{0, 1, 2}, clique_cert({0, 1, 2}), real);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLiftConflict);
  }
  EdgeRealization missing{{{0, 1}, {0, 3, 1}}};
  EXPECT_THROW(lift_subdivision(host, aux, std::vector<Vertex>{0, 1, 2},
                                clique_cert({0, 1, 2}), missing),
               Error);
}

TEST(InducedPathReduce, Examples) {
  Graph path = oracle::make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  std::vector<Vertex> all{0, 1, 2, 3, 4};
  EXPECT_EQ(induced_path_reduce(path, all, 0, 4), (Path{0, 1, 2, 3, 4}));
  Graph c6 = oracle::make(6, oracle::cycle_edges(6));
  std::vector<Vertex> six{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(induced_path_reduce(c6, six, 0, 3), (Path{0, 1, 2, 3}));
  EXPECT_EQ(induced_path_reduce(c6, six, 3, 0), (Path{3, 2, 1, 0}));
  Graph two = oracle::make(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(induced_path_reduce(two, std::vector<Vertex>{0, 1, 2, 3}, 0, 3), Error);
}

TEST(InducedPathReduce, OverlappingPathsShorten) {
  // Path A: 0-1-2-3-4-5, path B: 0-6-7-5, sharing endpoints; chord 2-7.
  Graph g = oracle::make(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                             {0, 6}, {6, 7}, {7, 5}, {2, 7}});
  std::vector<Vertex> vs{0, 1, 2, 3, 4, 5, 7};  // A plus the shared vertex 7
  Path p = induced_path_reduce(g, vs, 0, 5);
  EXPECT_EQ(p, (Path{0, 1, 2, 7, 5}));
  EXPECT_LT(p.size(), 6u);
  EXPECT_TRUE(is_induced_path(g, p));
}

TEST(InducedPathReduce, AlwaysChordless) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = oracle::random_matrix(20, 0.15, rng);
    Graph g = oracle::graph_of(a);
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < 20; ++v)
      if (v < 2 || rng() % 3) vs.push_back(v);
    try {
      Path p = induced_path_reduce(g, vs, 0, 1);
      EXPECT_TRUE(is_induced_path(g, p));
      EXPECT_EQ(static_cast<int>(p.size()) - 1,
                *distance(induced_subgraph(g, vs).graph, 0, 1));
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kDisconnected);
    }
  }
}

}  // namespace
}  // namespace isub
