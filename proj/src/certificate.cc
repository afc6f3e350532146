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

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "isub/error.h"

namespace isub {

VertexSet SubdivisionCertificate::vertices() const {
  std::vector<Vertex> all(branch.begin(), branch.end());
  for (const auto& [key, path] : paths) all.insert(all.end(), path.begin(), path.end());
  return make_vertex_set(std::move(all));
}

namespace {

void check_plain(const Graph& g, const SubdivisionCertificate& c,
                 std::vector<Violation>& out) {
  const int t = c.order();
  std::set<Vertex> branch_set;
  for (Vertex b : c.branch) {
    if (!g.contains(b)) {
      out.push_back({"unknown-vertex", {b}});
    } else if (!branch_set.insert(b).second) {
      out.push_back({"duplicate-branch", {b}});
    }
  }
  if (!out.empty()) return;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (!c.paths.count({i, j})) out.push_back({"missing-path", {c.branch[i], c.branch[j]}});
    }
  }
  for (const auto& [key, path] : c.paths) {
    auto [i, j] = key;
    if (i < 0 || j >= t || i >= j) out.push_back({"bad-pair", {}});
  }
  if (!out.empty()) return;

  std::map<Vertex, std::pair<int, int>> owner;  // internal vertex -> pair
  for (const auto& [key, path] : c.paths) {
    auto [i, j] = key;
    if (path.size() < 2 || path.front() != c.branch[i] || path.back() != c.branch[j]) {
      out.push_back({"bad-endpoints", path});
      continue;
    }
    std::set<Vertex> seen;
    for (std::size_t k = 0; k < path.size(); ++k) {
      Vertex v = path[k];
      if (!g.contains(v)) {
        out.push_back({"unknown-vertex", {v}});
        continue;
      }
      if (!seen.insert(v).second) out.push_back({"repeated-vertex", {v}});
      if (k + 1 < path.size() && !g.has_edge(v, path[k + 1])) {
        out.push_back({"non-edge", {v, path[k + 1]}});
      }
      if (k == 0 || k + 1 == path.size()) continue;
      if (branch_set.count(v)) {
        out.push_back({"branch-on-path", {v}});
        continue;
      }
      auto [it, fresh] = owner.emplace(v, key);
      if (!fresh && it->second != key) out.push_back({"path-overlap", {v}});
    }
  }
}

void check_induced(const Graph& g, const SubdivisionCertificate& c,
                   std::vector<Violation>& out) {
  std::set<Edge> path_edges;
  for (const auto& [key, path] : c.paths) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      path_edges.insert(std::minmax(path[k], path[k + 1]));
    }
  }
  VertexSet all = c.vertices();
  std::vector<char> member(g.num_vertices(), 0);
  for (Vertex v : all) member[v] = 1;
  for (Vertex u : all) {
    for (Vertex w : g.neighbors(u)) {
      if (w > u && member[w] && !path_edges.count({u, w})) {
        out.push_back({"extra-edge", {u, w}});
      }
    }
  }
}

}  // namespace

VerificationReport verify_subdivision(const Graph& g, const SubdivisionCertificate& c) {
  VerificationReport report;
  check_plain(g, c, report.violations);
  report.valid_plain = report.violations.empty();
  return report;
}

VerificationReport verify_induced_subdivision(const Graph& g,
                                              const SubdivisionCertificate& c) {
  VerificationReport report = verify_subdivision(g, c);
  if (!report.valid_plain) return report;
  check_induced(g, c, report.violations);
  report.valid_induced = report.violations.empty();
  return report;
}

std::string format_certificate(const SubdivisionCertificate& c) {
  std::ostringstream out;
  out << "branch " << c.order() << ':';
  for (Vertex b : c.branch) out << ' ' << b;
  out << '\n';
  for (const auto& [key, path] : c.paths) {
    out << "path " << key.first + 1 << ' ' << key.second + 1 << ':';
    for (Vertex v : path) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<long long> parse_ints(std::string_view s, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, v);
    if (ec != std::errc() || ptr != s.data() + j || v < 0) {
      throw Error(ErrorKind::kParseError, "certificate line " + std::to_string(line_no));
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace

SubdivisionCertificate parse_certificate(std::string_view text) {
  SubdivisionCertificate c;
  bool have_branch = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::kParseError, "certificate line " + std::to_string(line_no));
    }
    std::string_view head(line.data(), colon);
    std::string_view tail(line.data() + colon + 1, line.size() - colon - 1);
    if (head.starts_with("branch ")) {
      auto count = parse_ints(head.substr(7), line_no);
      auto ids = parse_ints(tail, line_no);
      if (have_branch || count.size() != 1 || static_cast<long long>(ids.size()) != count[0]) {
        throw Error(ErrorKind::kParseError, "certificate line " + std::to_string(line_no));
      }
      for (auto v : ids) c.branch.push_back(static_cast<Vertex>(v));
      have_branch = true;
    } else if (head.starts_with("path ")) {
      auto ij = parse_ints(head.substr(5), line_no);
      if (!have_branch || ij.size() != 2 || ij[0] < 1 || ij[0] >= ij[1] ||
          ij[1] > c.order()) {
        throw Error(ErrorKind::kParseError, "certificate line " + std::to_string(line_no));
      }
      Path p;
      for (auto v : parse_ints(tail, line_no)) p.push_back(static_cast<Vertex>(v));
      c.paths[{static_cast<int>(ij[0] - 1), static_cast<int>(ij[1] - 1)}] = std::move(p);
    } else {
      throw Error(ErrorKind::kParseError, "certificate line " + std::to_string(line_no));
    }
  }
  if (!have_branch) throw Error(ErrorKind::kParseError, "certificate has no branch line");
  return c;
}

namespace {

// Backtracking search shared by the plain and induced variants.
class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& g, int t, std::int64_t budget, bool induced)
      : g_(g), t_(t), budget_(budget), induced_(induced),
        state_(g.num_vertices(), kFree) {
    for (int i = 0; i < t; ++i) {
      for (int j = i + 1; j < t; ++j) pairs_.emplace_back(i, j);
    }
  }

  std::optional<SubdivisionCertificate> run() {
    if (t_ < 2) throw Error(ErrorKind::kInvalidInput, "brute force needs t >= 2");
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (g_.degree(v) >= t_ - 1) candidates.push_back(v);
    }
    if (static_cast<int>(candidates.size()) < t_) return std::nullopt;
    std::vector<int> pick(t_);
    for (int i = 0; i < t_; ++i) pick[i] = i;
    const int m = static_cast<int>(candidates.size());
    while (true) {
      branch_.clear();
      for (int i : pick) branch_.push_back(candidates[i]);
      if (try_branch_set()) {
        SubdivisionCertificate c;
        c.branch = branch_;
        for (std::size_t k = 0; k < pairs_.size(); ++k) c.paths[pairs_[k]] = paths_[k];
        return c;
      }
      int i = t_ - 1;
      while (i >= 0 && pick[i] == m - t_ + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < t_; ++j) pick[j] = pick[j - 1] + 1;
    }
    return std::nullopt;
  }

 private:
  enum : char { kFree = 0, kUsed = 1 };

  bool try_branch_set() {
    for (Vertex b : branch_) state_[b] = kUsed;
    paths_.assign(pairs_.size(), {});
    bool ok = place(0);
    for (Vertex b : branch_) state_[b] = kFree;
    return ok;
  }

  void tick() {
    if (++expanded_ > budget_) {
      throw Error(ErrorKind::kBudgetExhausted,
                  "brute-force search exceeded " + std::to_string(budget_) + " nodes");
    }
  }

  bool place(std::size_t k) {
    if (k == pairs_.size()) return true;
    tick();
    auto [i, j] = pairs_[k];
    Vertex src = branch_[i], dst = branch_[j];
    Path& path = paths_[k];
    path.assign(1, src);
    if (g_.has_edge(src, dst)) {
      path.push_back(dst);
      if (place(k + 1)) return true;
      if (induced_) return false;
      path.assign(1, src);
    }
    return extend(k, dst);
  }

  // May v become the next interior vertex after `cur` on a path to `dst`?
  bool admissible(Vertex v, Vertex cur, Vertex dst) const {
    if (state_[v] != kFree) return false;
    if (!induced_) return true;
    for (Vertex w : g_.neighbors(v)) {
      if (w != cur && w != dst && state_[w] != kFree) return false;
    }
    return true;
  }

  bool extend(std::size_t k, Vertex dst) {
    Path& path = paths_[k];
    Vertex cur = path.back();
    for (Vertex v : g_.neighbors(cur)) {
      if (!admissible(v, cur, dst)) continue;
      tick();
      state_[v] = kUsed;
      path.push_back(v);
      bool ok = false;
      if (g_.has_edge(v, dst)) {
        path.push_back(dst);
        ok = place(k + 1);
        if (!ok) path.pop_back();
      }
      // In induced mode a vertex adjacent to dst must be followed by dst.
      if (!ok && !(induced_ && g_.has_edge(v, dst))) ok = extend(k, dst);
      if (ok) return true;
      path.pop_back();
      state_[v] = kFree;
    }
    return false;
  }

  const Graph& g_;
  int t_;
  std::int64_t budget_;
  bool induced_;
  std::int64_t expanded_ = 0;
  std::vector<char> state_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Vertex> branch_;
  std::vector<Path> paths_;
};

}  // namespace

std::optional<SubdivisionCertificate> brute_force_induced(const Graph& g, int t,
                                                          std::int64_t budget) {
  return SubdivisionSearch(g, t, budget, true).run();
}

std::optional<SubdivisionCertificate> brute_force_plain(const Graph& g, int t,
                                                        std::int64_t budget) {
  return SubdivisionSearch(g, t, budget, false).run();
}

SubdivisionCertificate lift_subdivision(const Graph& host, const Graph& aux,
                                        std::span<const Vertex> aux_to_host,
                                        const SubdivisionCertificate& aux_cert,
                                        const EdgeRealization& realization) {
  auto conflict = [](const std::string& what) {
    throw Error(ErrorKind::kLiftConflict, what);
  };
  if (static_cast<int>(aux_to_host.size()) != aux.num_vertices()) {
    conflict("aux_to_host does not cover the auxiliary graph");
  }
  SubdivisionCertificate out;
  for (Vertex b : aux_cert.branch) out.branch.push_back(aux_to_host[b]);
  std::map<Vertex, Edge> interior_owner;
  std::set<Vertex> aux_images;
  for (Vertex v : aux_cert.vertices()) aux_images.insert(aux_to_host[v]);

  for (const auto& [key, aux_path] : aux_cert.paths) {
    Path lifted{aux_to_host[aux_path.front()]};
    for (std::size_t k = 0; k + 1 < aux_path.size(); ++k) {
      Vertex a = aux_path[k], b = aux_path[k + 1];
      if (!aux.has_edge(a, b)) conflict("auxiliary certificate uses a non-edge");
      Edge e = std::minmax(a, b);
      auto it = realization.find(e);
      if (it == realization.end()) {
        conflict("no realization for auxiliary edge " + std::to_string(e.first) + "-" +
                 std::to_string(e.second));
      }
      Path seq = it->second;
      if (seq.size() < 2 || seq.front() != aux_to_host[e.first] ||
          seq.back() != aux_to_host[e.second]) {
        conflict("realization endpoints do not match auxiliary edge");
      }
      if (a != e.first) std::reverse(seq.begin(), seq.end());
      for (std::size_t s = 1; s + 1 < seq.size(); ++s) {
        Vertex v = seq[s];
        if (aux_images.count(v)) conflict("realization passes through an auxiliary vertex");
        auto [pos, fresh] = interior_owner.emplace(v, e);
        if (!fresh && pos->second != e) {
          conflict("realizations share host vertex " + std::to_string(v));
        }
      }
      lifted.insert(lifted.end(), seq.begin() + 1, seq.end());
    }
    out.paths[key] = std::move(lifted);
  }
  auto report = verify_subdivision(host, out);
  if (!report.valid_plain) {
    conflict("lifted certificate fails verification: " + report.violations.front().kind);
  }
  return out;
}

Path induced_path_reduce(const Graph& g, std::span<const Vertex> vs, Vertex a, Vertex b) {
  std::vector<char> member(g.num_vertices(), 0);
  for (Vertex v : vs) member[v] = 1;
  if (!g.contains(a) || !g.contains(b) || !member[a] || !member[b]) {
    throw Error(ErrorKind::kInvalidInput, "path endpoints must lie in the vertex set");
  }
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> queue{b};
  dist[b] = 0;
  for (std::size_t head = 0; head < queue.size() && dist[a] < 0; ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (member[w] && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  if (dist[a] < 0) {
    throw Error(ErrorKind::kDisconnected, "no path between " + std::to_string(a) +
                                              " and " + std::to_string(b));
  }
  Path path{a};
  Vertex cur = a;
  while (cur != b) {
    for (Vertex w : g.neighbors(cur)) {  // ascending: first hit is smallest id
      if (member[w] && dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

bool is_induced_path(const Graph& g, std::span<const Vertex> p) {
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!index.emplace(p[i], i).second) return false;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1])) return false;
    for (Vertex w : g.neighbors(p[i])) {
      auto it = index.find(w);
      if (it == index.end()) continue;
      std::size_t j = it->second;
      if (j > i + 1) return false;
    }
  }
  return true;
}

}  // namespace isub
