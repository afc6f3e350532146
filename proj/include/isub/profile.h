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

#ifndef ISUB_PROFILE_H_
#define ISUB_PROFILE_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace isub {

// A threshold of the form coeff * d^exponent.
struct Threshold {
  double coeff = 1.0;
  double exponent = 0.0;

  double at(double d) const;
  // Smallest integer >= at(d), saturating at INT64_MAX.
  std::int64_t ceil_at(double d) const;

  friend bool operator==(const Threshold&, const Threshold&) = default;
};

// Every numeric constant the pipeline reads. Defaults (`full()`) are the
// constants at full strength; `scaled(s)` multiplies every exponent and
// structural radius by s so the same procedures run on desk-sized graphs.
struct ConstantsProfile {
  std::string name = "full";
  double scale = 1.0;

  // Unbalanced bipartite lemma.
  Threshold unbalanced_ratio{1e5, 4};         // |A| >= ratio * |B|
  Threshold unbalanced_sample_p{0.1, -1};     // 1 / (10 d)
  Threshold unbalanced_b_degree_cap{4, 1};    // A'' keeps <= 4d edges to B
  Threshold degeneracy_cap{2, 1};             // host must be 2d-degenerate
  Threshold aux_edge_density{10, 2};          // |E(H)| >= 10 d^2 |R'|
  int unbalanced_girth = 5;

  // Non-induced subdivision finder: average degree >= coeff * t^exponent.
  Threshold subdivision_avg_degree{10, 2};

  // Large-substructure lemma.
  double largesub_x_fraction = 0.5;           // |X| >= n / 2
  Threshold largesub_min_degree{1, 1};        // X-vertices have degree >= d
  Threshold largesub_z_degree_cap{8, 1};      // Z keeps degree <= 8d
  Threshold largesub_cut_floor{0.125, 1};     // e(Z1, V \ Z1) >= n d / 8
  Threshold largesub_u_degree_cap{1, 6};      // U' = more than d^6 edges to Z1
  Threshold largesub_small_u{1, -6};          // |U \ U'| <= n / d^6 branch
  Threshold largesub_y_floor{1.0 / 3.0, -7};  // |Y| >= n / (3 d^7)

  // Connected-good extraction.
  Threshold cg_min_degree{1, 6};              // delta(G) >= d^6
  Threshold cg_connectivity{100, 2};          // H' is 100 d^2 connected
  Threshold cg_boundary_cap{400, 4};          // |S_t| <= 400 d^4
  Threshold cg_peel_degree{1, 5};             // delete degree < d^5
  double cg_preserved_coeff = 0.5;            // |preserved| >= |H'| / (2 Delta)
  double cg_girth_per_exponent = 20;          // girth >= 20 C

  // Bounded maximum degree lemma and its path structure.
  Threshold maxdeg_delta_cap{1, 35};          // Delta(G) <= d^35
  Threshold maxdeg_min_degree{0.2, 1};        // delta(G) >= d / 5
  Threshold maxdeg_u_degree{1, 1};            // U-vertices have degree >= d
  double maxdeg_u_fraction = 0.05;            // |U| >= n / 20
  std::int64_t maxdeg_girth = 100000000;
  int ball_radius = 50;
  int ball_separation = 101;
  int structure_path_cap = 203;
  int induced_path_cap = 300;
  Threshold sparsify_p{1, -36};               // keep centres w.p. d^-36
  Threshold event_path_floor{1, 6};           // E_xz: fewer than d^6 paths
  double event_rate_coeff = 1.0;              // P(E_xz) <= exp(-coeff d)
  Threshold structure_min_degree{1, 6};       // delta(H) >= d^6
  Threshold link_connectivity{10, 2};         // H minus branches 10 d^2 conn.
  int branch_separation = 3;

  // Main theorem dispatcher.
  Threshold theorem_min_degree{1, 1};
  std::int64_t theorem_girth = 100000000;
  Threshold high_degree{1, 35};               // B = degree >= d^35
  double case1_fraction = 0.5;                // Case 1 iff |A'| >= n / 2
  Threshold case1_sample_p{0.25, -6};         // 1 / (4 d^6)
  Threshold case1_good_floor{1e-5, -31};      // |Y''| >= n / (10^5 d^31)
  Threshold case2_peel_degree{0.2, 1};        // delete degree < d / 5
  Threshold case2_peel_claim{6e5, 4};         // |S| < 6 10^5 d^4 |A|

  // Budgets.
  std::int64_t max_trials = 10000;
  std::int64_t max_rounds = 1000000;
  std::int64_t brute_force_budget = 20000000;
  int brute_force_max_n = 24;
  std::int64_t linkage_budget = 2000000;
  int linkage_exhaustive_max_n = 40;
  int reroute_rounds = 200;

  static ConstantsProfile full();
  // Exponents and radii multiplied by `scale`, coefficients raised to it.
  static ConstantsProfile scaled(double scale);
  // Desk-scale profile: scaled(3/35) with probabilities and budgets tuned so
  // the planted generators exercise every stage.
  static ConstantsProfile relaxed();

  // "full", "relaxed", or "scaled:S".
  static ConstantsProfile by_name(std::string_view name);

  // Override one field: "key=value" for scalars, "key=coeff:exponent" for
  // thresholds. Throws InvalidInput on unknown keys or malformed values.
  void set(std::string_view assignment);

  // One "key = value" line per field, in declaration order.
  std::string to_text() const;

  friend bool operator==(const ConstantsProfile&, const ConstantsProfile&) = default;
};

}  // namespace isub

#endif  // ISUB_PROFILE_H_
