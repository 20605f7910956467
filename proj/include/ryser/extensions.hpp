// Copyright 2026 The ryser-transfer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RYSER_EXTENSIONS_HPP
#define RYSER_EXTENSIONS_HPP

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ryser/embedding.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

/// H + e for one added edge e. `fresh[p]` marks parts where e uses a new vertex.
struct Extension {
  PartiteHypergraph hypergraph;
  Edge added;
  std::vector<bool> fresh;
};

/// An id not yet used in h, derived from `stem`.
inline std::string fresh_name(const PartiteHypergraph& h, const std::string& stem) {
  if (!h.find(stem)) return stem;
  for (std::size_t k = 1;; ++k) {
    std::string s = stem + "~" + std::to_string(k);
    if (!h.find(s)) return s;
  }
}

/// Adds the edge described per part by an existing vertex index or, when
/// fresh[p] is set, by a new vertex.
inline Extension extend_by_edge(const PartiteHypergraph& h, const Edge& choice, const std::vector<bool>& fresh) {
  Extension x{h, choice, fresh};
  for (std::size_t p = 0; p < h.r(); ++p)
    if (fresh[p]) x.added[p] = x.hypergraph.add_vertex(p, fresh_name(x.hypergraph, "new" + std::to_string(p + 1))).index;
  x.hypergraph.add_edge(x.added);
  return x;
}

/// Every raw single-edge extension of h (existing vertex or one fresh vertex
/// in each part) that is not already an edge and avoids `avoid`. No deduplication.
inline std::vector<Extension> raw_edge_extensions(const PartiteHypergraph& h, std::span<const VertexRef> avoid) {
  const std::size_t r = h.r();
  std::set<VertexRef> blocked(avoid.begin(), avoid.end());
  std::vector<std::vector<std::uint32_t>> options(r);  // UINT32_MAX = fresh
  for (std::uint32_t p = 0; p < r; ++p) {
    for (std::uint32_t i = 0; i < h.part_size(p); ++i)
      if (!blocked.count({p, i})) options[p].push_back(i);
    options[p].push_back(UINT32_MAX);
  }
  std::vector<Extension> out;
  std::vector<std::size_t> pos(r, 0);
  while (true) {
    Edge e(r);
    std::vector<bool> fresh(r, false);
    bool any_fresh = false;
    for (std::size_t p = 0; p < r; ++p) {
      e[p] = options[p][pos[p]];
      fresh[p] = e[p] == UINT32_MAX;
      any_fresh = any_fresh || fresh[p];
    }
    if (any_fresh || !h.has_edge(e)) out.push_back(extend_by_edge(h, e, fresh));
    std::size_t p = 0;
    while (p < r && ++pos[p] == options[p].size()) pos[p++] = 0;
    if (p == r) break;
  }
  return out;
}

/// All hypergraphs H + e up to isomorphism where the new edge e avoids C and
/// uses in each part an existing vertex of H or one fresh vertex. Candidates are
/// bucketed by an isomorphism invariant and compared exactly within a bucket.
inline std::vector<Extension> canonical_edge_extensions(const PartiteHypergraph& h, std::span<const VertexRef> cover,
                                                        CopyMode mode = CopyMode::part_permuting,
                                                        const Guards& g = {}) {
  std::vector<Extension> out;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  for (auto& x : raw_edge_extensions(h, cover)) {
    auto key = iso_key(x.hypergraph, mode);
    auto& bucket = buckets[key];
    bool dup = false;
    for (auto idx : bucket)
      if (contains_copy(out[idx].hypergraph, x.hypergraph, mode, g)) {
        dup = true;
        break;
      }
    if (dup) continue;
    bucket.push_back(out.size());
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace ryser

#endif  // RYSER_EXTENSIONS_HPP
