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

#include "isub/profile.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <type_traits>

#include "isub/error.h"

namespace isub {

double Threshold::at(double d) const { return coeff * std::pow(d, exponent); }

std::int64_t Threshold::ceil_at(double d) const {
  double v = at(d);
  // Absorb floating noise such as 0.2 * 5 = 1.0000000000000002.
  double r = std::round(v);
  if (std::fabs(v - r) < 1e-9 * std::max(1.0, std::fabs(v))) v = r;
  if (!(v < 9.2e18)) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(std::ceil(v));
}

namespace {

template <class Profile, class Fn>
void for_each_field(Profile& p, Fn&& fn) {
  fn("scale", p.scale);
  fn("unbalanced_ratio", p.unbalanced_ratio);
  fn("unbalanced_sample_p", p.unbalanced_sample_p);
  fn("unbalanced_b_degree_cap", p.unbalanced_b_degree_cap);
  fn("degeneracy_cap", p.degeneracy_cap);
  fn("aux_edge_density", p.aux_edge_density);
  fn("unbalanced_girth", p.unbalanced_girth);
  fn("subdivision_avg_degree", p.subdivision_avg_degree);
  fn("largesub_x_fraction", p.largesub_x_fraction);
  fn("largesub_min_degree", p.largesub_min_degree);
  fn("largesub_z_degree_cap", p.largesub_z_degree_cap);
  fn("largesub_cut_floor", p.largesub_cut_floor);
  fn("largesub_u_degree_cap", p.largesub_u_degree_cap);
  fn("largesub_small_u", p.largesub_small_u);
  fn("largesub_y_floor", p.largesub_y_floor);
  fn("cg_min_degree", p.cg_min_degree);
  fn("cg_connectivity", p.cg_connectivity);
  fn("cg_boundary_cap", p.cg_boundary_cap);
  fn("cg_peel_degree", p.cg_peel_degree);
  fn("cg_preserved_coeff", p.cg_preserved_coeff);
  fn("cg_girth_per_exponent", p.cg_girth_per_exponent);
  fn("maxdeg_delta_cap", p.maxdeg_delta_cap);
  fn("maxdeg_min_degree", p.maxdeg_min_degree);
  fn("maxdeg_u_degree", p.maxdeg_u_degree);
  fn("maxdeg_u_fraction", p.maxdeg_u_fraction);
  fn("maxdeg_girth", p.maxdeg_girth);
  fn("ball_radius", p.ball_radius);
  fn("ball_separation", p.ball_separation);
  fn("structure_path_cap", p.structure_path_cap);
  fn("induced_path_cap", p.induced_path_cap);
  fn("sparsify_p", p.sparsify_p);
  fn("event_path_floor", p.event_path_floor);
  fn("event_rate_coeff", p.event_rate_coeff);
  fn("structure_min_degree", p.structure_min_degree);
  fn("link_connectivity", p.link_connectivity);
  fn("branch_separation", p.branch_separation);
  fn("theorem_min_degree", p.theorem_min_degree);
  fn("theorem_girth", p.theorem_girth);
  fn("high_degree", p.high_degree);
  fn("case1_fraction", p.case1_fraction);
  fn("case1_sample_p", p.case1_sample_p);
  fn("case1_good_floor", p.case1_good_floor);
  fn("case2_peel_degree", p.case2_peel_degree);
  fn("case2_peel_claim", p.case2_peel_claim);
  fn("max_trials", p.max_trials);
  fn("max_rounds", p.max_rounds);
  fn("brute_force_budget", p.brute_force_budget);
  fn("brute_force_max_n", p.brute_force_max_n);
  fn("linkage_budget", p.linkage_budget);
  fn("linkage_exhaustive_max_n", p.linkage_exhaustive_max_n);
  fn("reroute_rounds", p.reroute_rounds);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double parse_double(std::string_view text, std::string_view key) {
  std::string s(text);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::kInvalidInput,
                "malformed value '" + s + "' for " + std::string(key));
  }
  return v;
}

template <class Int>
Int parse_int(std::string_view text, std::string_view key) {
  Int v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::kInvalidInput,
                "malformed integer '" + std::string(text) + "' for " + std::string(key));
  }
  return v;
}

}  // namespace

ConstantsProfile ConstantsProfile::full() { return ConstantsProfile{}; }

ConstantsProfile ConstantsProfile::scaled(double scale) {
  if (!(scale > 0.0) || scale > 1.0) {
    throw Error(ErrorKind::kInvalidInput, "scale must lie in (0, 1]");
  }
  ConstantsProfile p;
  p.name = "scaled:" + format_number(scale);
  p.scale = scale;
  for_each_field(p, [scale](std::string_view, auto& field) {
    using T = std::decay_t<decltype(field)>;
    if constexpr (std::is_same_v<T, Threshold>) {
      field.coeff = std::pow(field.coeff, scale);
      field.exponent = std::round(field.exponent * scale) + 0.0;
    }
  });
  p.ball_radius = std::max(1, static_cast<int>(std::lround(50 * scale)));
  p.ball_separation = 2 * p.ball_radius + 1;
  p.structure_path_cap = 2 * p.ball_separation + 1;
  p.induced_path_cap =
      std::max(p.structure_path_cap, static_cast<int>(std::lround(300 * scale)));
  const std::int64_t tree_girth = 2 * p.ball_separation + 2;
  p.maxdeg_girth = std::max<std::int64_t>(5, tree_girth);
  p.theorem_girth = std::max<std::int64_t>(5, tree_girth);
  p.cg_girth_per_exponent = 20 * scale;
  return p;
}

ConstantsProfile ConstantsProfile::relaxed() {
  ConstantsProfile p = scaled(3.0 / 35.0);
  p.name = "relaxed";
  // Unbalanced lemma: sampled hubs must leave enough good connectors for the
  // auxiliary graph to clear its density gate.
  p.unbalanced_ratio = {20, 0};
  p.unbalanced_sample_p = {1.5, -1};
  p.unbalanced_b_degree_cap = {4, 1};
  p.degeneracy_cap = {2, 1};
  p.aux_edge_density = {1, 1};
  // Average degree 2d: exactly what the density gate above delivers.
  p.subdivision_avg_degree = {2, 1};
  // Large-substructure lemma.
  p.largesub_min_degree = {1, 1};
  p.largesub_z_degree_cap = {8, 1};
  p.largesub_cut_floor = {0.125, 1};
  p.largesub_u_degree_cap = {1, 2};
  p.largesub_small_u = {1, -4};
  p.largesub_y_floor = {1.0 / 3.0, -3};
  // Connected-good extraction: 3-connected pieces with more than 36 vertices.
  p.cg_min_degree = {1, 1};
  p.cg_connectivity = {1, 1};
  p.cg_boundary_cap = {2, 2};
  p.cg_peel_degree = {1, 1};
  p.cg_girth_per_exponent = 0;
  // Path structure: radius-1 core balls, centres more than 3 apart.
  p.maxdeg_delta_cap = {1, 3};
  p.maxdeg_min_degree = {0.2, 1};
  p.maxdeg_u_degree = {1, 1};
  p.ball_radius = 1;
  p.ball_separation = 3;
  p.structure_path_cap = 7;
  p.induced_path_cap = 9;
  p.maxdeg_girth = 8;
  p.theorem_girth = 8;
  p.sparsify_p = {0.6, 0};
  p.event_path_floor = {1, 0};
  p.structure_min_degree = {1, 1};
  p.link_connectivity = {1, 0};
  // Main theorem.
  p.theorem_min_degree = {1, 1};
  p.high_degree = {1, 3};
  p.case1_sample_p = {0.5, 0};
  p.case1_good_floor = {0.005, 0};
  p.case2_peel_degree = {0.2, 1};
  p.case2_peel_claim = {6, 0};
  p.max_trials = 10000;
  p.max_rounds = 200000;
  return p;
}

ConstantsProfile ConstantsProfile::by_name(std::string_view name) {
  if (name == "full") return full();
  if (name == "relaxed") return relaxed();
  if (name.starts_with("scaled:")) {
    return scaled(parse_double(name.substr(7), "scaled"));
  }
  throw Error(ErrorKind::kInvalidInput, "unknown profile '" + std::string(name) + "'");
}

void ConstantsProfile::set(std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorKind::kInvalidInput,
                "override must look like key=value: '" + std::string(assignment) + "'");
  }
  std::string_view key = assignment.substr(0, eq);
  std::string_view value = assignment.substr(eq + 1);
  bool found = false;
  for_each_field(*this, [&](std::string_view name, auto& field) {
    if (name != key) return;
    found = true;
    using T = std::decay_t<decltype(field)>;
    if constexpr (std::is_same_v<T, Threshold>) {
      auto colon = value.find(':');
      if (colon == std::string_view::npos) {
        field = {parse_double(value, key), 0.0};
      } else {
        field = {parse_double(value.substr(0, colon), key),
                 parse_double(value.substr(colon + 1), key)};
      }
    } else if constexpr (std::is_same_v<T, double>) {
      field = parse_double(value, key);
    } else {
      field = parse_int<T>(value, key);
    }
  });
  if (!found) {
    throw Error(ErrorKind::kInvalidInput, "unknown profile key '" + std::string(key) + "'");
  }
}

std::string ConstantsProfile::to_text() const {
  std::ostringstream out;
  out << "profile = " << name << '\n';
  for_each_field(*this, [&out](std::string_view key, const auto& field) {
    using T = std::decay_t<decltype(field)>;
    out << key << " = ";
    if constexpr (std::is_same_v<T, Threshold>) {
      out << format_number(field.coeff) << ':' << format_number(field.exponent);
    } else if constexpr (std::is_same_v<T, double>) {
      out << format_number(field);
    } else {
      out << field;
    }
    out << '\n';
  });
  return out.str();
}

}  // namespace isub
