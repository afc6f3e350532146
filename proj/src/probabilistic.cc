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

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace isub {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

RandomSource RandomSource::derive(std::string_view label, std::uint64_t index) const {
  return RandomSource(
      splitmix64(seed_ ^ splitmix64(fnv1a64(label)) ^ splitmix64(index + 1)));
}

std::uint64_t RandomSource::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double RandomSource::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomSource::uniform(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection.
  unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

bool RandomSource::bernoulli(double p) {
  double u = next_double();
  return u < p;
}

VertexSet bernoulli_subset(std::span<const Vertex> universe, double p, RandomSource& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInvalidInput, "probability outside [0, 1]");
  }
  std::vector<Vertex> out;
  for (Vertex v : universe) {
    if (rng.bernoulli(p)) out.push_back(v);
  }
  return make_vertex_set(std::move(out));
}

VertexSet right_neighbor_prune(std::span<const Vertex> s, const DegeneracyOrdering& ord,
                               const Graph& g) {
  std::vector<Vertex> by_position(s.begin(), s.end());
  std::sort(by_position.begin(), by_position.end(), [&](Vertex a, Vertex b) {
    return ord.position[a] > ord.position[b];
  });
  std::vector<char> kept(g.num_vertices(), 0);
  std::vector<Vertex> out;
  for (Vertex v : by_position) {
    bool blocked = false;
    for (Vertex w : g.neighbors(v)) {
      if (kept[w]) {
        blocked = true;
        break;
      }
    }
    if (!blocked) {
      kept[v] = 1;
      out.push_back(v);
    }
  }
  VertexSet result = make_vertex_set(std::move(out));
  if (!is_independent(g, result)) {
    throw Error(ErrorKind::kStructureViolation, "right_neighbor_prune produced an edge");
  }
  return result;
}

std::string format_trial_log(std::span<const TrialRecord> log) {
  std::ostringstream out;
  for (const auto& r : log) {
    char score[64];
    std::snprintf(score, sizeof(score), "%.6g", r.score);
    out << "trial " << r.trial << " | score " << score << " | "
        << (r.accepted ? "accepted" : "rejected") << '\n';
  }
  return out.str();
}

int EventSystem::add_variable(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInvalidInput, "variable probability outside [0, 1]");
  }
  probs_.push_back(p);
  index_built_ = false;
  return static_cast<int>(probs_.size()) - 1;
}

int EventSystem::add_event(std::vector<int> scope, Predicate violated) {
  std::sort(scope.begin(), scope.end());
  scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
  for (int v : scope) {
    if (v < 0 || v >= num_variables()) {
      throw Error(ErrorKind::kInvalidInput, "event scope names unknown variable");
    }
  }
  scopes_.push_back(std::move(scope));
  preds_.push_back(std::move(violated));
  index_built_ = false;
  return static_cast<int>(scopes_.size()) - 1;
}

void EventSystem::build_index() const {
  if (index_built_) return;
  events_of_var_.assign(probs_.size(), {});
  for (int e = 0; e < num_events(); ++e) {
    for (int v : scopes_[e]) events_of_var_[v].push_back(e);
  }
  index_built_ = true;
}

int EventSystem::dependency_degree(int event) const {
  build_index();
  std::vector<int> others;
  for (int v : scopes_[event]) {
    for (int e : events_of_var_[v]) {
      if (e != event) others.push_back(e);
    }
  }
  std::sort(others.begin(), others.end());
  return static_cast<int>(std::unique(others.begin(), others.end()) - others.begin());
}

int EventSystem::max_dependency_degree() const {
  int best = 0;
  for (int e = 0; e < num_events(); ++e) best = std::max(best, dependency_degree(e));
  return best;
}

std::vector<int> EventSystem::violated_events(const Assignment& a) const {
  std::vector<int> out;
  for (int e = 0; e < num_events(); ++e) {
    if (preds_[e](a)) out.push_back(e);
  }
  return out;
}

ResampleResult lll_resample(const EventSystem& sys, RandomSource& rng,
                            std::int64_t max_rounds) {
  ResampleResult result;
  result.assignment.assign(sys.num_variables(), 0);
  for (int v = 0; v < sys.num_variables(); ++v) {
    result.assignment[v] = rng.bernoulli(sys.probability(v)) ? 1 : 0;
  }
  auto initial = sys.violated_events(result.assignment);
  std::set<int> violated(initial.begin(), initial.end());

  // events touching each variable, for incremental re-checks
  std::vector<std::vector<int>> events_of_var(sys.num_variables());
  for (int e = 0; e < sys.num_events(); ++e) {
    for (int v : sys.scope(e)) events_of_var[v].push_back(e);
  }

  std::vector<int> affected;
  while (!violated.empty()) {
    if (result.resamples >= max_rounds) {
      throw RoundsExhausted("resampling did not converge within " +
                                std::to_string(max_rounds) + " rounds; " +
                                std::to_string(violated.size()) + " events violated",
                            result.assignment,
                            std::vector<int>(violated.begin(), violated.end()));
    }
    int e = *violated.begin();
    for (int v : sys.scope(e)) {
      result.assignment[v] = rng.bernoulli(sys.probability(v)) ? 1 : 0;
    }
    ++result.resamples;
    affected.clear();
    for (int v : sys.scope(e)) {
      affected.insert(affected.end(), events_of_var[v].begin(), events_of_var[v].end());
    }
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    for (int f : affected) {
      if (sys.violated(f, result.assignment)) {
        violated.insert(f);
      } else {
        violated.erase(f);
      }
    }
  }
  return result;
}

}  // namespace isub
