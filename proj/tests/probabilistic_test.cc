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

#include "isub/probabilistic.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "oracles.h"

namespace isub {
namespace {

std::vector<Vertex> range(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

TEST(RandomSource, ReferenceValues) {
  // First outputs of SplitMix64 seeded with 0, as published with the
  // reference implementation.
  RandomSource r(0);
  EXPECT_EQ(r.next_u64(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(r.next_u64(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(r.next_u64(), 0x06c45d188009454fULL);
}

TEST(RandomSource, Determinism) {
  RandomSource a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  auto x = RandomSource(42).derive("op", 3), y = RandomSource(42).derive("op", 3);
  EXPECT_EQ(x.next_u64(), y.next_u64());
  auto z = RandomSource(42).derive("op", 4);
  auto w = RandomSource(42).derive("other", 3);
  auto base = RandomSource(42).derive("op", 3).next_u64();
  EXPECT_NE(z.next_u64(), base);
  EXPECT_NE(w.next_u64(), base);
}

TEST(RandomSource, UniformInRange) {
  RandomSource r(9);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[r.uniform(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(BernoulliSubset, Extremes) {
  RandomSource r(1);
  auto u = range(50);
  EXPECT_TRUE(bernoulli_subset(u, 0.0, r).empty());
  EXPECT_EQ(bernoulli_subset(u, 1.0, r), u);
  EXPECT_THROW(bernoulli_subset(u, 1.5, r), Error);
}

TEST(BernoulliSubset, Concentration) {
  RandomSource r = RandomSource(2026).derive("bernoulli_subset", 0);
  auto s = bernoulli_subset(range(10000), 0.1, r);
  double sigma = std::sqrt(10000 * 0.1 * 0.9);
  EXPECT_LE(std::fabs(static_cast<double>(s.size()) - 1000.0), 3 * sigma);
}

TEST(RightNeighborPrune, Examples) {
  Graph p = oracle::make(10, oracle::petersen_edges());
  auto ord = degeneracy_ordering(p);
  VertexSet indep{0, 2, 6};
  ASSERT_TRUE(is_independent(p, indep));
  EXPECT_EQ(right_neighbor_prune(indep, ord, p), indep);

  Graph edge = oracle::make(2, {{0, 1}});
  auto eo = degeneracy_ordering(edge);
  auto kept = right_neighbor_prune(VertexSet{0, 1}, eo, edge);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0], eo.order[1]);  // the later endpoint survives
}

TEST(RightNeighborPrune, AlwaysIndependentAndNoRightNeighbour) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_matrix(30, 0.15, rng);
    Graph g = oracle::graph_of(a);
    auto ord = degeneracy_ordering(g);
    RandomSource r(trial);
    auto s = bernoulli_subset(range(30), 0.4, r);
    auto out = right_neighbor_prune(s, ord, g);
    EXPECT_TRUE(is_independent(g, out));
    EXPECT_TRUE(std::includes(s.begin(), s.end(), out.begin(), out.end()));
    // Every dropped vertex has a later-ordered neighbour that was kept.
    for (Vertex v : s) {
      if (std::binary_search(out.begin(), out.end(), v)) continue;
      bool witness = false;
      for (Vertex w : g.neighbors(v))
        witness |= std::binary_search(out.begin(), out.end(), w) &&
                   ord.position[w] > ord.position[v];
      EXPECT_TRUE(witness);
    }
  }
}

TEST(RetryExpectation, FirstTrialAndExhaustion) {
  RandomSource r(5);
  std::function<int(RandomSource&)> constant = [](RandomSource&) { return 7; };
  std::function<double(const int&)> score = [](const int& v) { return v; };
  auto res = retry_expectation(constant, score, 5.0, 10, r);
  EXPECT_EQ(res.trials, 1);
  EXPECT_EQ(res.value, 7);
  try {
    retry_expectation(constant, score, 8.0, 4, r, "demo");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTrialsExhausted);
    EXPECT_NE(std::string(e.what()).find("best score 7"), std::string::npos);
  }
}

TEST(RetryExpectation, DeterministicTrialStreams) {
  RandomSource r(77);
  std::function<std::uint64_t(RandomSource&)> draw = [](RandomSource& s) {
    return s.uniform(100);
  };
  std::function<double(const std::uint64_t&)> score = [](const std::uint64_t& v) {
    return static_cast<double>(v);
  };
  auto a = retry_expectation(draw, score, 95.0, 1000, r);
  auto b = retry_expectation(draw, score, 95.0, 1000, r);
  EXPECT_EQ(a.trials, b.trials);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.value, r.derive("retry", a.trials).uniform(100));
  EXPECT_EQ(format_trial_log(a.log), format_trial_log(b.log));
  EXPECT_NE(format_trial_log(a.log).find("| accepted"), std::string::npos);
}

TEST(LllResample, NoEvents) {
  EventSystem sys;
  for (int i = 0; i < 5; ++i) sys.add_variable(0.5);
  RandomSource r(3);
  auto res = lll_resample(sys, r, 10);
  EXPECT_EQ(res.resamples, 0);
  EXPECT_EQ(res.assignment.size(), 5u);
}

TEST(LllResample, UnavoidableEvent) {
  EventSystem sys;
  int v = sys.add_variable(0.5);
  sys.add_event({v}, [](const EventSystem::Assignment&) { return true; });
  RandomSource r(3);
  try {
    lll_resample(sys, r, 50);
    FAIL();
  } catch (const RoundsExhausted& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRoundsExhausted);
    EXPECT_EQ(e.violated, std::vector<int>{0});
    EXPECT_EQ(e.assignment.size(), 1u);
  }
}

TEST(LllResample, SparseKSat) {
  // 6-SAT with every clause sharing variables with at most 2^(6-3) = 8 others.
  const int k = 6, vars = 600, clauses = 100;
  std::mt19937_64 rng(31);
  std::vector<std::vector<int>> lits;
  std::vector<std::vector<int>> clauses_of(vars);
  while (static_cast<int>(lits.size()) < clauses) {
    std::vector<int> c;
    std::set<int> used;
    while (static_cast<int>(c.size()) < k) {
      int v = static_cast<int>(rng() % vars);
      if (!used.insert(v).second) continue;
      c.push_back(rng() % 2 ? v + 1 : -(v + 1));
    }
    std::set<int> nbrs;
    for (int l : c)
      for (int o : clauses_of[std::abs(l) - 1]) nbrs.insert(o);
    bool ok = nbrs.size() <= 8;
    for (int o : nbrs) {
      std::set<int> theirs;
      for (int l : lits[o])
        for (int q : clauses_of[std::abs(l) - 1]) theirs.insert(q);
      if (theirs.size() + 1 > 8) ok = false;
    }
    if (!ok) continue;
    for (int l : c) clauses_of[std::abs(l) - 1].push_back(static_cast<int>(lits.size()));
    lits.push_back(c);
  }
  EventSystem sys;
  for (int i = 0; i < vars; ++i) sys.add_variable(0.5);
  for (const auto& c : lits) {
    std::vector<int> scope;
    for (int l : c) scope.push_back(std::abs(l) - 1);
    sys.add_event(scope, [c](const EventSystem::Assignment& a) {
      for (int l : c)
        if ((l > 0) == (a[std::abs(l) - 1] != 0)) return false;
      return true;  // every literal false
    });
  }
  EXPECT_LE(sys.max_dependency_degree(), 8);
  RandomSource r(2026);
  auto res = lll_resample(sys, r, 100000);
  EXPECT_TRUE(sys.violated_events(res.assignment).empty());
  RandomSource r2(2026);
  EXPECT_EQ(lll_resample(sys, r2, 100000).assignment, res.assignment);
}

}  // namespace
}  // namespace isub
