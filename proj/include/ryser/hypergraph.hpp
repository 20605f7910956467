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

#ifndef RYSER_HYPERGRAPH_HPP
#define RYSER_HYPERGRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ryser/error.hpp"

namespace ryser {

/// Size limits for the exact solvers. Exceeding one raises GuardExceeded.
struct Guards {
  std::size_t max_edges = 12;           // exact matching number / vertex cover
  std::size_t max_vertices = 40;        // exact independence number
  std::size_t max_dual_edges = 10;      // (a,b)-dual search, hypergraph side
  std::size_t max_dual_vertices = 60;   // (a,b)-dual search, metric side
  std::size_t max_search_edges = 64;    // containment and sunflower search
  std::size_t max_oracle_vertices = 30; // component-cover oracle
  std::size_t max_oracle_components = 24;
};

/// A vertex of a partite hypergraph: its part and its position inside the part.
/// The ordering (part first, then position) is the tie-breaking order used by
/// every deterministic search in the library.
struct VertexRef {
  std::uint32_t part = 0;
  std::uint32_t index = 0;
  auto operator<=>(const VertexRef&) const = default;
};

/// edge[p] is the index of the edge's vertex inside part p.
using Edge = std::vector<std::uint32_t>;

/// An r-uniform r-partite hypergraph with explicit, named parts. Edges are
/// kept in insertion order and are pairwise distinct.
class PartiteHypergraph {
 public:
  PartiteHypergraph() = default;
  explicit PartiteHypergraph(std::size_t r) : parts_(r) {
    if (r < 2) throw InvalidInput("hypergraph uniformity must be >= 2");
  }

  std::size_t r() const { return parts_.size(); }
  std::size_t part_size(std::size_t p) const { return parts_.at(p).size(); }
  std::size_t vertex_count() const {
    std::size_t n = 0;
    for (const auto& p : parts_) n += p.size();
    return n;
  }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  const std::string& name(VertexRef v) const { return parts_.at(v.part).at(v.index); }
  const std::vector<std::string>& part_names(std::size_t p) const { return parts_.at(p); }

  VertexRef add_vertex(std::size_t part, std::string name) {
    if (part >= r()) throw InvalidInput("part index out of range");
    if (index_.count(name)) throw InvalidInput("duplicate vertex id '" + name + "'");
    VertexRef v{static_cast<std::uint32_t>(part), static_cast<std::uint32_t>(parts_[part].size())};
    index_.emplace(name, v);
    parts_[part].push_back(std::move(name));
    return v;
  }

  std::optional<VertexRef> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t add_edge(Edge e) {
    if (e.size() != r()) throw InvalidInput("edge must have exactly one vertex per part");
    for (std::size_t p = 0; p < r(); ++p)
      if (e[p] >= parts_[p].size()) throw InvalidInput("edge vertex index out of range");
    if (!edge_set_.insert(e).second) throw InvalidInput("duplicate edge " + edge_string(e));
    edges_.push_back(std::move(e));
    return edges_.size() - 1;
  }

  /// Adds the edge through the named vertices; names may be given in any order.
  std::size_t add_edge_named(std::span<const std::string> names) {
    if (names.size() != r()) throw InvalidInput("edge must list exactly r vertices");
    Edge e(r(), UINT32_MAX);
    for (const auto& n : names) {
      auto v = find(n);
      if (!v) throw InvalidInput("unknown vertex id '" + n + "'");
      if (e[v->part] != UINT32_MAX) throw InvalidInput("edge has two vertices in one part");
      e[v->part] = v->index;
    }
    return add_edge(std::move(e));
  }

  bool has_edge(const Edge& e) const { return edge_set_.count(e) > 0; }

  bool contains(std::size_t edge_index, VertexRef v) const {
    return edges_.at(edge_index)[v.part] == v.index;
  }

  std::size_t degree(VertexRef v) const {
    std::size_t d = 0;
    for (const auto& e : edges_) d += e[v.part] == v.index;
    return d;
  }

  bool is_isolated(VertexRef v) const { return degree(v) == 0; }

  std::vector<VertexRef> vertices() const {
    std::vector<VertexRef> out;
    for (std::uint32_t p = 0; p < r(); ++p)
      for (std::uint32_t i = 0; i < parts_[p].size(); ++i) out.push_back({p, i});
    return out;
  }

  std::vector<VertexRef> edge_vertices(std::size_t edge_index) const {
    std::vector<VertexRef> out;
    const auto& e = edges_.at(edge_index);
    for (std::uint32_t p = 0; p < r(); ++p) out.push_back({p, e[p]});
    return out;
  }

  /// True when every edge meets the vertex set.
  bool covered_by(std::span<const VertexRef> cover) const {
    for (const auto& e : edges_) {
      bool hit = false;
      for (const auto& v : cover) hit = hit || e[v.part] == v.index;
      if (!hit) return false;
    }
    return true;
  }

  /// The hypergraph on the given edges, keeping only vertices they use.
  PartiteHypergraph edge_subgraph(std::span<const std::size_t> edge_indices) const {
    PartiteHypergraph out(r());
    std::vector<std::vector<std::uint32_t>> remap(r());
    for (std::size_t p = 0; p < r(); ++p) remap[p].assign(parts_[p].size(), UINT32_MAX);
    std::vector<bool> used_vertex(vertex_count_offset(r()), false);
    for (auto ei : edge_indices)
      for (std::size_t p = 0; p < r(); ++p) used_vertex[vertex_count_offset(p) + edges_.at(ei)[p]] = true;
    for (std::size_t p = 0; p < r(); ++p)
      for (std::size_t i = 0; i < parts_[p].size(); ++i)
        if (used_vertex[vertex_count_offset(p) + i]) remap[p][i] = out.add_vertex(p, parts_[p][i]).index;
    for (auto ei : edge_indices) {
      Edge e(r());
      for (std::size_t p = 0; p < r(); ++p) e[p] = remap[p][edges_[ei][p]];
      out.add_edge(std::move(e));
    }
    return out;
  }

  PartiteHypergraph without_isolated() const {
    std::vector<std::size_t> all(edges_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return edge_subgraph(all);
  }

  /// Global position of the first vertex of part p in (part, index) order.
  std::size_t vertex_count_offset(std::size_t p) const {
    std::size_t n = 0;
    for (std::size_t q = 0; q < p; ++q) n += parts_[q].size();
    return n;
  }

  std::string edge_string(const Edge& e) const {
    std::string s = "{";
    for (std::size_t p = 0; p < e.size(); ++p) {
      if (p) s += ",";
      s += p < parts_.size() && e[p] < parts_[p].size() ? parts_[p][e[p]] : "?";
    }
    return s + "}";
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < edges_.size(); ++i) s += (i ? " " : "") + edge_string(edges_[i]);
    return s.empty() ? "{}" : s;
  }

 private:
  std::vector<std::vector<std::string>> parts_;
  std::unordered_map<std::string, VertexRef> index_;
  std::vector<Edge> edges_;
  std::set<Edge> edge_set_;
};

/// A sunflower inside a host hypergraph: edges pairwise meeting exactly in the core.
struct Sunflower {
  std::vector<VertexRef> core;
  std::vector<std::vector<VertexRef>> petals;
  std::vector<std::size_t> edges;  // host edge indices, one per petal
};

/// Checks the sunflower shape invariants against its host.
inline bool is_valid_sunflower(const PartiteHypergraph& h, const Sunflower& s) {
  if (s.petals.size() != s.edges.size()) return false;
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    if (s.core.size() + s.petals[i].size() != h.r()) return false;
    auto verts = h.edge_vertices(s.edges[i]);
    std::vector<VertexRef> both = s.core;
    both.insert(both.end(), s.petals[i].begin(), s.petals[i].end());
    std::sort(both.begin(), both.end());
    if (both != verts) return false;
  }
  for (std::size_t i = 0; i < s.petals.size(); ++i)
    for (std::size_t j = i + 1; j < s.petals.size(); ++j) {
      if (s.edges[i] == s.edges[j]) return false;
      for (const auto& u : s.petals[i])
        for (const auto& v : s.petals[j])
          if (u == v) return false;
    }
  return true;
}

inline std::string vertex_name(std::size_t part, std::size_t k) {
  return "v" + std::to_string(part + 1) + "." + std::to_string(k);
}

/// The single-edge hypergraph E_r.
inline PartiteHypergraph single_edge(std::size_t r) {
  PartiteHypergraph h(r);
  Edge e(r);
  for (std::size_t p = 0; p < r; ++p) e[p] = h.add_vertex(p, vertex_name(p, 0)).index;
  h.add_edge(e);
  return h;
}

/// The sunflower S_r(s, t) whose core occupies parts 0..s-1 (or the parts in
/// core_parts when given).
inline PartiteHypergraph sunflower_hypergraph(std::size_t r, std::size_t s, std::size_t t,
                                              std::vector<std::size_t> core_parts = {}) {
  if (core_parts.empty())
    for (std::size_t p = 0; p < s; ++p) core_parts.push_back(p);
  if (core_parts.size() != s) throw InvalidInput("core part list must have s entries");
  PartiteHypergraph h(r);
  std::vector<bool> in_core(r, false);
  std::vector<std::uint32_t> core_index(r, 0);
  for (auto p : core_parts) {
    in_core.at(p) = true;
    core_index[p] = h.add_vertex(p, vertex_name(p, 0)).index;
  }
  for (std::size_t i = 0; i < t; ++i) {
    Edge e(r);
    for (std::size_t p = 0; p < r; ++p)
      e[p] = in_core[p] ? core_index[p] : h.add_vertex(p, vertex_name(p, h.part_size(p))).index;
    h.add_edge(e);
  }
  return h;
}

/// M_{r,n}: n pairwise disjoint edges.
inline PartiteHypergraph matching_hypergraph(std::size_t r, std::size_t n) {
  return sunflower_hypergraph(r, 0, n);
}

/// t edges sharing one vertex in part `center`, disjoint elsewhere.
inline PartiteHypergraph star_hypergraph(std::size_t r, std::size_t center, std::size_t t) {
  return sunflower_hypergraph(r, 1, t, {center});
}

}  // namespace ryser

#endif  // RYSER_HYPERGRAPH_HPP
