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

#ifndef ISUB_SRC_PIPELINE_INTERNAL_H_
#define ISUB_SRC_PIPELINE_INTERNAL_H_

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isub/connectivity.h"
#include "isub/pipeline.h"

namespace isub::detail {

inline void require(bool ok, std::string_view stage, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kHypothesisNotMet, std::string(stage) + ": " + what);
}

inline std::string strip_kind(const Error& e) {
  std::string msg = e.what();
  auto prefix = std::string(to_string(e.kind())) + ": ";
  if (msg.starts_with(prefix)) msg.erase(0, prefix.size());
  return msg;
}

// Runs fn, prefixing the stage name onto any library error. Errors that
// carry payloads are rethrown with the payload intact.
template <class Fn>
auto at_stage(std::string_view stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const EarlySuccess&) {
    throw;
  } catch (const RoundsExhausted& e) {
    throw RoundsExhausted(std::string(stage) + ": " + strip_kind(e), e.assignment, e.violated);
  } catch (const ConnectedGoodError& e) {
    throw ConnectedGoodError(e.kind(), std::string(stage) + ": " + strip_kind(e), e.trace);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(stage) + ": " + strip_kind(e));
  }
}

inline std::vector<char> mask_of(int n, std::span<const Vertex> s) {
  std::vector<char> m(n, 0);
  for (Vertex v : s) m[v] = 1;
  return m;
}

inline int count_into(const Graph& g, Vertex v, const std::vector<char>& mask) {
  int c = 0;
  for (Vertex w : g.neighbors(v)) c += mask[w];
  return c;
}

inline void check_ids(const Graph& g, std::span<const Vertex> s, std::string_view stage) {
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw Error(ErrorKind::kInvalidInput,
                  std::string(stage) + ": vertex " + std::to_string(v) + " out of range");
    }
  }
}

template <class... Parts>
std::string kv(Parts&&... parts) {
  std::ostringstream out;
  ((out << parts), ...);
  return out.str();
}

// Rejects a certificate that is not induced in g.
void require_induced(const Graph& g, const SubdivisionCertificate& c, std::string_view stage);

}  // namespace isub::detail

#endif  // ISUB_SRC_PIPELINE_INTERNAL_H_
