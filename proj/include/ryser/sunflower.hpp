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

#ifndef RYSER_SUNFLOWER_HPP
#define RYSER_SUNFLOWER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ryser/hypergraph.hpp"

namespace ryser {

namespace detail {

// Picks `t` edges of `group` that pairwise differ in every part outside the core.
class PetalSearch {
 public:
  PetalSearch(const PartiteHypergraph& h, const std::vector<std::size_t>& group,
              const std::vector<std::size_t>& free_parts, std::size_t t)
      : h_(h), group_(group), free_(free_parts), t_(t), used_(h.r()) {
    for (auto p : free_) used_[p].assign(h.part_size(p), false);
  }

  std::optional<std::vector<std::size_t>> run() {
    if (recurse(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool recurse(std::size_t from) {
    if (chosen_.size() == t_) return true;
    for (std::size_t j = from; j < group_.size(); ++j) {
      if (chosen_.size() + (group_.size() - j) < t_) return false;
      const Edge& e = h_.edge(group_[j]);
      bool ok = true;
      for (auto p : free_) ok = ok && !used_[p][e[p]];
      if (!ok) continue;
      for (auto p : free_) used_[p][e[p]] = true;
      chosen_.push_back(group_[j]);
      if (recurse(j + 1)) return true;
      chosen_.pop_back();
      for (auto p : free_) used_[p][e[p]] = false;
    }
    return false;
  }

  const PartiteHypergraph& h_;
  const std::vector<std::size_t>& group_;
  const std::vector<std::size_t>& free_;
  std::size_t t_;
  std::vector<std::vector<bool>> used_;
  std::vector<std::size_t> chosen_;
};

}  // namespace detail

/// Exact search for a sunflower with exactly t petals. Cores are tried by
/// size, then by part set, then by vertex order; within a core the edges
/// through it are grouped and a disjoint family of t off-core parts is
/// searched for.
inline std::optional<Sunflower> find_sunflower(const PartiteHypergraph& h, std::size_t t,
                                               bool require_nonempty_core, const Guards& g = {}) {
  if (t < 1) throw PreconditionError("find_sunflower: t must be >= 1");
  if (h.edge_count() > g.max_search_edges)
    throw GuardExceeded("find_sunflower: instance exceeds search guard");
  const std::size_t r = h.r();
  for (std::size_t s = require_nonempty_core ? 1 : 0; s <= r; ++s) {
    if (s == r && t > 1) break;
    // Part subsets of size s in lexicographic order.
    std::vector<bool> pick(r, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      std::vector<std::size_t> core_parts, free_parts;
      for (std::size_t p = 0; p < r; ++p) (pick[p] ? core_parts : free_parts).push_back(p);
      std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> groups;
      for (std::size_t i = 0; i < h.edge_count(); ++i) {
        std::vector<std::uint32_t> key;
        for (auto p : core_parts) key.push_back(h.edge(i)[p]);
        groups[key].push_back(i);
      }
      for (const auto& [key, group] : groups) {
        if (group.size() < t) continue;
        auto chosen = detail::PetalSearch(h, group, free_parts, t).run();
        if (!chosen) continue;
        Sunflower sf;
        for (std::size_t c = 0; c < core_parts.size(); ++c)
          sf.core.push_back({static_cast<std::uint32_t>(core_parts[c]), key[c]});
        for (auto ei : *chosen) {
          std::vector<VertexRef> petal;
          for (auto p : free_parts) petal.push_back({static_cast<std::uint32_t>(p), h.edge(ei)[p]});
          sf.petals.push_back(std::move(petal));
          sf.edges.push_back(ei);
        }
        return sf;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

/// Greedy matching extension through core-disjoint sunflowers: given
/// sunflowers S_1..S_a with at least (nu+1)r petals and a matching M of size
/// nu-a+1 avoiding every core, picks one petal edge per sunflower whose
/// off-core part avoids everything chosen so far and every other core.
/// Returns M followed by the chosen edges (host edge indices), a matching of
/// size nu+1.
inline std::vector<std::size_t> extend_matching_via_sunflowers(const PartiteHypergraph& h,
                                                               std::span<const Sunflower> sunflowers,
                                                               std::span<const std::size_t> matching,
                                                               std::size_t nu) {
  const std::size_t a = sunflowers.size();
  const std::size_t need_petals = (nu + 1) * h.r();
  if (a > nu + 1) throw PreconditionError("extend_matching: more sunflowers than nu+1");
  for (std::size_t i = 0; i < a; ++i) {
    if (!is_valid_sunflower(h, sunflowers[i]))
      throw PreconditionError("extend_matching: sunflower " + std::to_string(i) + " is malformed");
    if (sunflowers[i].petals.size() < need_petals)
      throw PreconditionError("extend_matching: petals insufficient in sunflower " + std::to_string(i) +
                              " (" + std::to_string(sunflowers[i].petals.size()) + " < " +
                              std::to_string(need_petals) + ")");
  }
  std::vector<std::set<VertexRef>> cores(a);
  for (std::size_t i = 0; i < a; ++i) cores[i].insert(sunflowers[i].core.begin(), sunflowers[i].core.end());
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i + 1; j < a; ++j)
      for (const auto& v : cores[i])
        if (cores[j].count(v))
          throw PreconditionError("extend_matching: cores intersect (sunflowers " + std::to_string(i) +
                                  " and " + std::to_string(j) + " share " + h.name(v) + ")");
  if (matching.size() != nu + 1 - a)
    throw PreconditionError("extend_matching: matching must have size nu-a+1 = " +
                            std::to_string(nu + 1 - a));
  std::set<VertexRef> used;
  for (auto ei : matching) {
    for (const auto& v : h.edge_vertices(ei)) {
      for (std::size_t i = 0; i < a; ++i)
        if (cores[i].count(v))
          throw PreconditionError("extend_matching: M touches a core (" + h.name(v) + ")");
      if (!used.insert(v).second)
        throw PreconditionError("extend_matching: M is not a matching");
    }
  }
  std::vector<std::size_t> out(matching.begin(), matching.end());
  for (std::size_t i = 0; i < a; ++i) {
    std::set<VertexRef> blocked = used;
    for (std::size_t j = 0; j < a; ++j)
      if (j != i) blocked.insert(cores[j].begin(), cores[j].end());
    std::optional<std::size_t> pick;
    for (std::size_t k = 0; k < sunflowers[i].edges.size() && !pick; ++k) {
      bool ok = true;
      for (const auto& v : sunflowers[i].petals[k]) ok = ok && !blocked.count(v);
      if (ok) pick = k;
    }
    if (!pick) throw InternalError("extend_matching: no admissible petal in sunflower " + std::to_string(i));
    for (const auto& v : h.edge_vertices(sunflowers[i].edges[*pick])) used.insert(v);
    out.push_back(sunflowers[i].edges[*pick]);
  }
  if (used.size() != out.size() * h.r()) throw InternalError("extend_matching: output is not a matching");
  return out;
}

}  // namespace ryser

#endif  // RYSER_SUNFLOWER_HPP
