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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "isub/error.h"

namespace isub {

VertexSet make_vertex_set(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorKind::kInvalidInput, "negative vertex count");
  adj_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::kInvalidInput,
                  "edge " + std::to_string(u) + " " + std::to_string(v) +
                      " outside vertex range of size " + std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorKind::kInvalidInput,
                  "self-loop at vertex " + std::to_string(u));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  num_edges_ = 0;
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    num_edges_ += static_cast<std::int64_t>(list.size());
  }
  num_edges_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(list.begin(), list.end(), target);
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int best = std::numeric_limits<int>::max();
  for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

double Graph::average_degree() const {
  if (adj_.empty()) return 0.0;
  return 2.0 * static_cast<double>(num_edges_) / static_cast<double>(adj_.size());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_nonneg(std::string_view token, std::int64_t& value) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size() && value >= 0 &&
         value <= std::numeric_limits<Vertex>::max();
}

}  // namespace

Graph load_graph(std::string_view text) {
  std::optional<std::int64_t> declared;
  std::vector<Edge> edges;
  std::int64_t max_id = -1;
  std::size_t line_no = 0;
  bool seen_content = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    auto fail = [&]() {
      throw Error(ErrorKind::kParseError, "line " + std::to_string(line_no) +
                                              ": '" + std::string(line) + "'");
    };
    if (tokens[0] == "nodes") {
      std::int64_t n = 0;
      if (seen_content || tokens.size() != 2 || !parse_nonneg(tokens[1], n)) fail();
      declared = n;
    } else {
      std::int64_t u = 0, v = 0;
      if (tokens.size() != 2 || !parse_nonneg(tokens[0], u) ||
          !parse_nonneg(tokens[1], v)) {
        fail();
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      max_id = std::max({max_id, u, v});
    }
    seen_content = true;
    if (end == text.size()) break;
  }
  std::int64_t n = declared.value_or(max_id + 1);
  if (max_id >= n) {
    throw Error(ErrorKind::kInvalidInput, "vertex id " + std::to_string(max_id) +
                                              " exceeds declared nodes " +
                                              std::to_string(n));
  }
  return Graph(static_cast<int>(n), edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "nodes " << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::optional<int> girth(const Graph& g) {
  const int n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n, -1), parent(n, -1);
  std::vector<Vertex> touched;
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    for (Vertex v : touched) dist[v] = -1, parent[v] = -1;
    touched.clear();
    queue.clear();
    dist[root] = 0;
    touched.push_back(root);
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      // Any cycle closed from here on has length >= 2 * dist[u].
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> queue;
  for (Vertex s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw Error(ErrorKind::kInvalidInput, "unknown vertex " + std::to_string(v));
  }
}

}  // namespace

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  Vertex src[] = {u};
  int d = bfs_distances(g, src)[v];
  if (d < 0) return std::nullopt;
  return d;
}

VertexSet ball(const Graph& g, Vertex center, int radius) {
  require_vertex(g, center);
  if (radius < 0) throw Error(ErrorKind::kInvalidInput, "negative radius");
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> queue{center};
  dist[center] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (dist[u] == radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return make_vertex_set(std::move(queue));
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const int n = g.num_vertices();
  DegeneracyOrdering result;
  result.order.reserve(n);
  result.position.assign(n, -1);
  std::vector<int> residual(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    residual[v] = g.degree(v);
    queue.emplace(residual[v], v);
  }
  while (!queue.empty()) {
    auto [deg, v] = *queue.begin();
    queue.erase(queue.begin());
    result.degeneracy = std::max(result.degeneracy, deg);
    result.position[v] = static_cast<int>(result.order.size());
    result.order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (result.position[w] >= 0) continue;
      queue.erase({residual[w], w});
      --residual[w];
      queue.emplace(residual[w], w);
    }
  }
  return result;
}

VertexSet greedy_independent_set(const Graph& g, const DegeneracyOrdering& ord,
                                 std::span<const Vertex> subset) {
  const int n = g.num_vertices();
  std::vector<char> member(n, 0);
  for (Vertex v : subset) member[v] = 1;
  std::vector<int> colour(n, -1);
  std::vector<int> class_size;
  std::vector<char> used;
  for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
    Vertex v = *it;
    if (!member[v]) continue;
    used.assign(class_size.size() + 1, 0);
    for (Vertex w : g.neighbors(v)) {
      if (colour[w] >= 0) used[colour[w]] = 1;
    }
    int c = 0;
    while (used[c]) ++c;
    colour[v] = c;
    if (c == static_cast<int>(class_size.size())) class_size.push_back(0);
    ++class_size[c];
  }
  if (class_size.empty()) return {};
  int best = static_cast<int>(
      std::max_element(class_size.begin(), class_size.end()) - class_size.begin());
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] == best) out.push_back(v);
  }
  return out;
}

VertexSet greedy_independent_set(const Graph& g, const DegeneracyOrdering& ord) {
  return greedy_independent_set(g, ord, ord.order);
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> member(g.num_vertices(), 0);
  for (Vertex v : s) member[v] = 1;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (member[w]) return false;
    }
  }
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  InducedSubgraph result;
  result.to_host = make_vertex_set(std::vector<Vertex>(s.begin(), s.end()));
  result.from_host.assign(g.num_vertices(), -1);
  for (std::size_t i = 0; i < result.to_host.size(); ++i) {
    Vertex v = result.to_host[i];
    require_vertex(g, v);
    result.from_host[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < result.to_host.size(); ++i) {
    for (Vertex w : g.neighbors(result.to_host[i])) {
      Vertex j = result.from_host[w];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  result.graph = Graph(static_cast<int>(result.to_host.size()), edges);
  return result;
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// sum_{i < terms} (d - 1)^i
std::uint64_t geometric(int d, int terms) {
  std::uint64_t sum = 0, power = 1;
  for (int i = 0; i < terms; ++i) {
    sum = sat_add(sum, power);
    power = sat_mul(power, static_cast<std::uint64_t>(d - 1));
  }
  return sum;
}

}  // namespace

MooreBound moore_floor(int d, int g) {
  if (d < 3 || g < 3) {
    throw Error(ErrorKind::kInvalidInput, "moore_floor needs d >= 3 and g >= 3");
  }
  MooreBound result;
  if (g % 2 == 1) {
    result.bound = sat_add(1, sat_mul(static_cast<std::uint64_t>(d),
                                      geometric(d, (g - 1) / 2)));
  } else {
    result.bound = sat_mul(2, geometric(d, g / 2));
  }
  long double advisory = std::pow(static_cast<long double>(d), g / 2.0L);
  if (advisory >= 1.8e19L) {
    result.advisory = std::numeric_limits<std::uint64_t>::max();
  } else {
    result.advisory = static_cast<std::uint64_t>(std::ceil(advisory - 1e-9L));
  }
  return result;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.num_vertices(), 0);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> queue{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    out.push_back(make_vertex_set(std::move(queue)));
  }
  return out;
}

}  // namespace isub
