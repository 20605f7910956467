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

#ifndef RYSER_COLORED_GRAPH_HPP
#define RYSER_COLORED_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ryser/hypergraph.hpp"

namespace ryser {

/// One colored edge; colors are 0-based internally (1-based in JSON).
struct ColoredEdge {
  std::uint32_t u = 0, v = 0, color = 0;
  auto operator<=>(const ColoredEdge&) const = default;
};

/// An r-edge-colored multigraph. Parallel edges of distinct colors are kept;
/// a repeated (u, v, color) triple is collapsed.
class ColoredMultigraph {
 public:
  ColoredMultigraph() = default;
  explicit ColoredMultigraph(std::size_t r) : r_(r) {
    if (r < 1) throw InvalidInput("colored graph needs at least one color");
  }

  std::size_t r() const { return r_; }
  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<ColoredEdge>& edges() const { return edges_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  std::uint32_t add_vertex(std::string name) {
    if (index_.count(name)) throw InvalidInput("duplicate vertex id '" + name + "'");
    index_.emplace(name, static_cast<std::uint32_t>(names_.size()));
    names_.push_back(std::move(name));
    return static_cast<std::uint32_t>(names_.size() - 1);
  }

  std::optional<std::uint32_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Returns false when the edge was a same-color duplicate.
  bool add_edge(std::uint32_t u, std::uint32_t v, std::uint32_t color) {
    if (u >= vertex_count() || v >= vertex_count()) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loop on '" + names_[u] + "'");
    if (color >= r_) throw InvalidInput("edge color out of range");
    if (u > v) std::swap(u, v);
    ColoredEdge e{u, v, color};
    if (!edge_set_.insert(e).second) return false;
    edges_.push_back(e);
    return true;
  }

  bool has_edge(std::uint32_t u, std::uint32_t v, std::uint32_t color) const {
    if (u > v) std::swap(u, v);
    return edge_set_.count({u, v, color}) > 0;
  }

  bool adjacent(std::uint32_t u, std::uint32_t v) const {
    for (std::uint32_t c = 0; c < r_; ++c)
      if (has_edge(u, v, c)) return true;
    return false;
  }

  std::vector<std::vector<std::uint32_t>> color_adjacency(std::uint32_t color) const {
    std::vector<std::vector<std::uint32_t>> adj(vertex_count());
    for (const auto& e : edges_)
      if (e.color == color) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
      }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }

  /// Component id of every vertex in the color class; ids are assigned in
  /// order of the smallest member, isolated vertices are singletons.
  std::vector<std::uint32_t> component_labels(std::uint32_t color) const {
    auto adj = color_adjacency(color);
    std::vector<std::uint32_t> label(vertex_count(), UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t s = 0; s < vertex_count(); ++s) {
      if (label[s] != UINT32_MAX) continue;
      std::queue<std::uint32_t> q;
      q.push(s);
      label[s] = next;
      while (!q.empty()) {
        auto x = q.front();
        q.pop();
        for (auto y : adj[x])
          if (label[y] == UINT32_MAX) {
            label[y] = next;
            q.push(y);
          }
      }
      ++next;
    }
    return label;
  }

  std::vector<std::vector<std::uint32_t>> components(std::uint32_t color) const {
    auto label = component_labels(color);
    std::uint32_t count = 0;
    for (auto l : label) count = std::max(count, l + 1);
    std::vector<std::vector<std::uint32_t>> out(count);
    for (std::uint32_t v = 0; v < label.size(); ++v) out[label[v]].push_back(v);
    return out;
  }

 private:
  std::size_t r_ = 1;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<ColoredEdge> edges_;
  std::set<ColoredEdge> edge_set_;
};

namespace detail {

// Maximum independent set on <= 64 vertices given as neighbour bitmasks.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  std::uint64_t run() {
    std::uint64_t all = adj_.size() == 64 ? ~0ULL : ((1ULL << adj_.size()) - 1);
    recurse(all, 0);
    return best_;
  }

 private:
  void recurse(std::uint64_t cand, std::uint64_t cur) {
    if (cand == 0) {
      if (std::popcount(cur) > std::popcount(best_)) best_ = cur;
      return;
    }
    if (std::popcount(cur) + std::popcount(cand) <= std::popcount(best_)) return;
    // Branch on the lowest candidate with the most candidate neighbours.
    int pick = -1, pick_deg = -1;
    for (std::uint64_t c = cand; c; c &= c - 1) {
      int v = std::countr_zero(c);
      int d = std::popcount(adj_[v] & cand);
      if (d > pick_deg) pick = v, pick_deg = d;
    }
    std::uint64_t bit = 1ULL << pick;
    if (pick_deg == 0) {  // all remaining candidates are mutually non-adjacent
      recurse(0, cur | cand);
      return;
    }
    recurse(cand & ~bit & ~adj_[pick], cur | bit);
    recurse(cand & ~bit, cur);
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t best_ = 0;
};

}  // namespace detail

/// A maximum independent set (vertex indices, ascending), ignoring colors.
inline std::vector<std::uint32_t> maximum_independent_set(const ColoredMultigraph& g, const Guards& guards = {}) {
  const std::size_t n = g.vertex_count();
  if (n > guards.max_vertices || n > 64)
    throw GuardExceeded("independence_number: " + std::to_string(n) + " vertices exceeds guard of " +
                        std::to_string(std::min<std::size_t>(guards.max_vertices, 64)));
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1ULL << e.v;
    adj[e.v] |= 1ULL << e.u;
  }
  std::uint64_t best = detail::IndependentSetSearch(std::move(adj)).run();
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < n; ++v)
    if (best >> v & 1ULL) out.push_back(v);
  return out;
}

/// The independence number alpha(G).
inline std::size_t independence_number(const ColoredMultigraph& g, const Guards& guards = {}) {
  return maximum_independent_set(g, guards).size();
}

inline bool is_independent_set(const ColoredMultigraph& g, const std::vector<std::uint32_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace ryser

#endif  // RYSER_COLORED_GRAPH_HPP
