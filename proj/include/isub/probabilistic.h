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

#ifndef ISUB_PROBABILISTIC_H_
#define ISUB_PROBABILISTIC_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isub/error.h"
#include "isub/graph.h"

namespace isub {

// SplitMix64 (Steele, Lea, Flood 2014). Sub-streams are seeded with
//   splitmix64(seed ^ splitmix64(fnv1a64(label)) ^ splitmix64(index + 1))
// so every (label, index) pair has its own reproducible stream.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  RandomSource derive(std::string_view label, std::uint64_t index) const;

  std::uint64_t next_u64();
  // Uniform in [0, 1) with 53 bits of precision.
  double next_double();
  // Uniform in [0, bound); bound > 0.
  std::uint64_t uniform(std::uint64_t bound);
  bool bernoulli(double p);

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Each element kept independently with probability p, drawing one variate
// per element in the given order.
VertexSet bernoulli_subset(std::span<const Vertex> universe, double p, RandomSource& rng);

// Walks `s` from the latest to the earliest position of `ord` and keeps a
// vertex iff none of its neighbours was already kept. The result has no
// member with a later-ordered neighbour in the result, hence is independent.
VertexSet right_neighbor_prune(std::span<const Vertex> s, const DegeneracyOrdering& ord,
                               const Graph& g);

struct TrialRecord {
  std::int64_t trial = 0;
  double score = 0;
  bool accepted = false;
};

// "trial k | score s | accepted" lines.
std::string format_trial_log(std::span<const TrialRecord> log);

template <class T>
struct RetryResult {
  T value;
  std::int64_t trials = 0;
  std::vector<TrialRecord> log;
};

// Trial k (1-based) samples from rng.derive(label, k); the first trial whose
// score reaches `floor` wins. Throws TrialsExhausted naming the best score.
template <class T>
RetryResult<T> retry_expectation(const std::function<T(RandomSource&)>& sampler,
                                 const std::function<double(const T&)>& score,
                                 double floor, std::int64_t max_trials,
                                 const RandomSource& rng,
                                 std::string_view label = "retry") {
  if (max_trials < 1) throw Error(ErrorKind::kInvalidInput, "max_trials must be >= 1");
  std::vector<TrialRecord> log;
  std::optional<double> best;
  for (std::int64_t k = 1; k <= max_trials; ++k) {
    RandomSource stream = rng.derive(label, static_cast<std::uint64_t>(k));
    T value = sampler(stream);
    double s = score(value);
    bool ok = s >= floor;
    log.push_back({k, s, ok});
    if (!best || s > *best) best = s;
    if (ok) return RetryResult<T>{std::move(value), k, std::move(log)};
  }
  throw Error(ErrorKind::kTrialsExhausted,
              std::string(label) + ": no trial reached floor " + std::to_string(floor) +
                  " in " + std::to_string(max_trials) + " trials, best score " +
                  std::to_string(best.value_or(0.0)));
}

// Bernoulli variables plus bad events over them. Two events depend iff their
// scopes intersect.
class EventSystem {
 public:
  using Assignment = std::vector<char>;
  using Predicate = std::function<bool(const Assignment&)>;

  int add_variable(double p);
  // `violated` must read only the variables listed in `scope`.
  int add_event(std::vector<int> scope, Predicate violated);

  int num_variables() const { return static_cast<int>(probs_.size()); }
  int num_events() const { return static_cast<int>(scopes_.size()); }
  double probability(int var) const { return probs_[var]; }
  std::span<const int> scope(int event) const { return scopes_[event]; }
  bool violated(int event, const Assignment& a) const { return preds_[event](a); }

  // Number of other events sharing a variable with `event`.
  int dependency_degree(int event) const;
  int max_dependency_degree() const;
  // Indices of violated events, ascending.
  std::vector<int> violated_events(const Assignment& a) const;

 private:
  std::vector<double> probs_;
  std::vector<std::vector<int>> scopes_;
  std::vector<Predicate> preds_;
  mutable std::vector<std::vector<int>> events_of_var_;
  mutable bool index_built_ = false;
  void build_index() const;
};

struct ResampleResult {
  EventSystem::Assignment assignment;
  std::int64_t resamples = 0;
};

// Carries the partial assignment when resampling does not converge.
class RoundsExhausted : public Error {
 public:
  RoundsExhausted(const std::string& message, EventSystem::Assignment assignment,
                  std::vector<int> violated)
      : Error(ErrorKind::kRoundsExhausted, message),
        assignment(std::move(assignment)),
        violated(std::move(violated)) {}

  EventSystem::Assignment assignment;
  std::vector<int> violated;
};

// Moser-Tardos: sample every variable, then while some event is violated,
// resample the scope of the lowest-index violated event.
ResampleResult lll_resample(const EventSystem& sys, RandomSource& rng,
                            std::int64_t max_rounds);

}  // namespace isub

#endif  // ISUB_PROBABILISTIC_H_
