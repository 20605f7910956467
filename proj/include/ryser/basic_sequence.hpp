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

// Generation of the sequence of (a,b)-basic hypergraphs.
//
// An (a,b)-basic hypergraph is a core-disjoint sunflowers S_1..S_a, each with
// a nonempty core and P petals, plus a residue R with b edges that avoids
// every core, has nu(R) <= nu - a and holds no P-petal sunflower with a
// nonempty core. Items are emitted in the order F(nu, b_max), ...,
// F(nu, 0), F(nu-1, b_max), ..., F(0, 1); the witness of an item is the
// union of cores together with a minimum cover of R.
//
// With P = (nu+1)r and b unbounded this is the complete list, and the list
// ends with the single edge. Finite caps below those values give a shorter
// list that may fail to certify.

#ifndef RYSER_BASIC_SEQUENCE_HPP
#define RYSER_BASIC_SEQUENCE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ryser/embedding.hpp"
#include "ryser/exact.hpp"
#include "ryser/matching.hpp"
#include "ryser/stability.hpp"
#include "ryser/sunflower.hpp"

namespace ryser {

struct GenerationCaps {
  std::optional<std::size_t> petals;  // default (nu+1)r
  std::optional<std::size_t> b_max;   // default min(b_0, 16)
  std::size_t vertex_max = 48;
  std::size_t state_max = 20000;      // shapes kept per level before giving up
};

/// r!((nu+1)r)^{r+1}: residues with this many edges always hold a big sunflower.
inline Integer basic_b0(std::size_t r, std::size_t nu) {
  Integer f = 1;
  for (std::size_t i = 2; i <= r; ++i) f *= static_cast<unsigned long>(i);
  return f * pow(static_cast<unsigned long>((nu + 1) * r), r + 1);
}

/// 2^{(r+nu)^{2r}}, the length bound for the complete list.
inline bool within_length_bound(std::size_t length, std::size_t r, std::size_t nu) {
  Integer e = pow(static_cast<unsigned long>(r + nu), 2 * r);
  // length < 2^64 <= 2^e whenever e >= 64.
  if (e >= 64) return true;
  return Integer(static_cast<unsigned long>(length)) <= pow(2UL, e.get_ui());
}

/// One labelled partial shape: the hypergraph plus role marks on residue
/// edges and core vertices.
struct BasicShape {
  std::size_t a = 0, b = 0;
  PartiteHypergraph hypergraph;
  std::vector<int> edge_role;                  // 0 sunflower, 1 residue
  std::vector<std::vector<int>> vertex_role;   // 1 for core vertices
  std::vector<VertexRef> cores;

  std::vector<std::size_t> residue_edges() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edge_role.size(); ++i)
      if (edge_role[i] == 1) out.push_back(i);
    return out;
  }
};

struct GenerationResult {
  StableSequence sequence;
  Certification certification;
  std::vector<std::pair<std::size_t, std::size_t>> levels;  // (a, b) per item
  bool length_bound_ok = true;
};

namespace detail {

inline constexpr std::uint32_t fresh_slot = UINT32_MAX;

inline BasicShape empty_shape(std::size_t r) {
  BasicShape s{0, 0, PartiteHypergraph(r), {}, std::vector<std::vector<int>>(r), {}};
  return s;
}

inline std::uint32_t add_named(BasicShape& s, std::size_t p) {
  auto v = s.hypergraph.add_vertex(p, vertex_name(p, s.hypergraph.part_size(p)));
  s.vertex_role[p].push_back(0);
  return v.index;
}

inline bool is_core(const BasicShape& s, std::size_t p, std::uint32_t i) { return s.vertex_role[p][i] == 1; }

/// Labelled isomorphism between two shapes of equal size.
inline bool same_shape(const BasicShape& x, const BasicShape& y, CopyMode mode, const Guards& g) {
  if (x.hypergraph.edge_count() != y.hypergraph.edge_count() ||
      x.hypergraph.vertex_count() != y.hypergraph.vertex_count())
    return false;
  CopyLabels labels{x.edge_role, y.edge_role, x.vertex_role, y.vertex_role};
  return contains_copy(x.hypergraph, y.hypergraph, mode, g, &labels).has_value();
}

inline std::vector<std::size_t> shape_key(const BasicShape& s, CopyMode mode) {
  CopyLabels labels{s.edge_role, s.edge_role, s.vertex_role, s.vertex_role};
  return iso_key(s.hypergraph, mode, &labels, true);
}

class ShapeSet {
 public:
  ShapeSet(CopyMode mode, const Guards& g, std::size_t cap) : mode_(mode), g_(g), cap_(cap) {}

  void insert(BasicShape s) {
    auto& bucket = buckets_[shape_key(s, mode_)];
    for (auto idx : bucket)
      if (same_shape(shapes_[idx], s, mode_, g_)) return;
    if (shapes_.size() >= cap_) throw GuardExceeded("generate_basic_sequence: shape count exceeds state_max");
    bucket.push_back(shapes_.size());
    shapes_.push_back(std::move(s));
  }

  std::vector<BasicShape> take() { return std::move(shapes_); }

 private:
  CopyMode mode_;
  Guards g_;
  std::size_t cap_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets_;
  std::vector<BasicShape> shapes_;
};

// Options per part for a new vertex: any existing non-core vertex or fresh.
inline std::vector<std::vector<std::uint32_t>> slot_options(const BasicShape& s) {
  std::vector<std::vector<std::uint32_t>> opt(s.hypergraph.r());
  for (std::size_t p = 0; p < opt.size(); ++p) {
    for (std::uint32_t i = 0; i < s.hypergraph.part_size(p); ++i)
      if (!is_core(s, p, i)) opt[p].push_back(i);
    opt[p].push_back(fresh_slot);
  }
  return opt;
}

// Every admissible way to add one more sunflower with the given petal count.
inline void add_sunflower(const BasicShape& base, std::size_t petals, std::size_t vertex_max, ShapeSet& out) {
  const std::size_t r = base.hypergraph.r();
  auto opt = slot_options(base);
  for (std::size_t mask = 1; mask + 1 < (1u << r); ++mask) {
    std::vector<std::size_t> core_parts, petal_parts;
    for (std::size_t p = 0; p < r; ++p) (mask >> p & 1 ? core_parts : petal_parts).push_back(p);
    // Core choice: an existing non-core vertex or fresh per core part.
    std::vector<std::size_t> cpos(core_parts.size(), 0);
    while (true) {
      // Petal codes: a tuple over petal parts; petals are listed with
      // nondecreasing codes so that each multiset appears once.
      std::vector<std::vector<std::uint32_t>> codes;
      {
        std::vector<std::size_t> pos(petal_parts.size(), 0);
        while (true) {
          std::vector<std::uint32_t> c;
          for (std::size_t k = 0; k < petal_parts.size(); ++k) c.push_back(opt[petal_parts[k]][pos[k]]);
          codes.push_back(std::move(c));
          std::size_t k = 0;
          while (k < pos.size() && ++pos[k] == opt[petal_parts[k]].size()) pos[k++] = 0;
          if (k == pos.size()) break;
        }
      }
      std::vector<std::uint32_t> core_choice;
      for (std::size_t k = 0; k < core_parts.size(); ++k) core_choice.push_back(opt[core_parts[k]][cpos[k]]);
      std::vector<std::size_t> chosen;
      std::set<std::pair<std::size_t, std::uint32_t>> used;
      for (std::size_t k = 0; k < core_parts.size(); ++k)
        if (core_choice[k] != fresh_slot) used.insert({core_parts[k], core_choice[k]});
      auto emit = [&] {
        BasicShape s = base;
        Edge core_edge(r, 0);
        for (std::size_t k = 0; k < core_parts.size(); ++k) {
          auto p = core_parts[k];
          auto v = core_choice[k] == fresh_slot ? add_named(s, p) : core_choice[k];
          s.vertex_role[p][v] = 1;
          s.cores.push_back({static_cast<std::uint32_t>(p), v});
          core_edge[p] = v;
        }
        for (auto ci : chosen) {
          Edge e = core_edge;
          for (std::size_t k = 0; k < petal_parts.size(); ++k)
            e[petal_parts[k]] = codes[ci][k] == fresh_slot ? add_named(s, petal_parts[k]) : codes[ci][k];
          if (s.hypergraph.has_edge(e)) return;
          s.hypergraph.add_edge(e);
          s.edge_role.push_back(0);
        }
        if (s.hypergraph.vertex_count() > vertex_max) return;
        s.a += 1;
        std::sort(s.cores.begin(), s.cores.end());
        out.insert(std::move(s));
      };
      auto rec = [&](auto&& self, std::size_t from) -> void {
        if (chosen.size() == petals) {
          emit();
          return;
        }
        for (std::size_t ci = from; ci < codes.size(); ++ci) {
          bool ok = true;
          for (std::size_t k = 0; k < petal_parts.size() && ok; ++k)
            if (codes[ci][k] != fresh_slot) ok = !used.count({petal_parts[k], codes[ci][k]});
          if (!ok) continue;
          for (std::size_t k = 0; k < petal_parts.size(); ++k)
            if (codes[ci][k] != fresh_slot) used.insert({petal_parts[k], codes[ci][k]});
          chosen.push_back(ci);
          // A code using an existing vertex cannot repeat; all-fresh codes can.
          self(self, ci);
          chosen.pop_back();
          for (std::size_t k = 0; k < petal_parts.size(); ++k)
            if (codes[ci][k] != fresh_slot) used.erase({petal_parts[k], codes[ci][k]});
        }
      };
      rec(rec, 0);
      std::size_t k = 0;
      while (k < cpos.size() && ++cpos[k] == opt[core_parts[k]].size()) cpos[k++] = 0;
      if (k == cpos.size()) break;
    }
  }
}

// Every admissible way to add one residue edge.
inline void add_residue_edge(const BasicShape& base, std::size_t nu_left, std::size_t petals, std::size_t vertex_max,
                             const Guards& g, ShapeSet& out) {
  const std::size_t r = base.hypergraph.r();
  auto opt = slot_options(base);
  std::vector<std::size_t> pos(r, 0);
  while (true) {
    Edge e(r);
    std::vector<bool> fresh(r);
    bool any_fresh = false;
    for (std::size_t p = 0; p < r; ++p) {
      e[p] = opt[p][pos[p]];
      fresh[p] = e[p] == fresh_slot;
      any_fresh = any_fresh || fresh[p];
    }
    if (any_fresh || !base.hypergraph.has_edge(e)) {
      BasicShape s = base;
      for (std::size_t p = 0; p < r; ++p)
        if (fresh[p]) e[p] = add_named(s, p);
      s.hypergraph.add_edge(e);
      s.edge_role.push_back(1);
      s.b += 1;
      if (s.hypergraph.vertex_count() <= vertex_max) {
        auto res = s.hypergraph.edge_subgraph(s.residue_edges());
        Guards wide = g;
        wide.max_edges = std::max(g.max_edges, res.edge_count());
        bool ok = maximum_matching(res, wide, nu_left + 1).size() <= nu_left;
        ok = ok && !find_sunflower(res, petals, true, g);
        if (ok) out.insert(std::move(s));
      }
    }
    std::size_t p = 0;
    while (p < r && ++pos[p] == opt[p].size()) pos[p++] = 0;
    if (p == r) break;
  }
}

}  // namespace detail

/// Items of F(a, b) together with their witnesses.
inline std::vector<WitnessedHypergraph> basic_items(const std::vector<BasicShape>& shapes, const Guards& g) {
  std::vector<WitnessedHypergraph> out;
  for (const auto& s : shapes) {
    auto res_idx = s.residue_edges();
    std::vector<VertexRef> witness = s.cores;
    if (!res_idx.empty()) {
      auto res = s.hypergraph.edge_subgraph(res_idx);
      Guards wide = g;
      wide.max_edges = std::max(g.max_edges, res.edge_count());
      for (const auto& v : vertex_cover_min(res, wide)) witness.push_back(*s.hypergraph.find(res.name(v)));
    }
    std::sort(witness.begin(), witness.end());
    out.push_back({s.hypergraph, witness});
  }
  return out;
}

/// Builds and certifies the basic sequence for (r, nu) within `caps`.
inline GenerationResult generate_basic_sequence(std::size_t r, std::size_t nu, const GenerationCaps& caps = {},
                                                CopyMode mode = CopyMode::part_permuting, const Guards& g = {}) {
  if (r < 2) throw InvalidInput("generate_basic_sequence: r must be >= 2");
  if (nu < 1) throw InvalidInput("generate_basic_sequence: nu must be >= 1");
  const std::size_t petals = caps.petals.value_or((nu + 1) * r);
  if (petals < 2) throw InvalidInput("generate_basic_sequence: petals must be >= 2");
  std::size_t b_max = caps.b_max.value_or(16);
  Integer b0 = basic_b0(r, nu);
  if (Integer(static_cast<unsigned long>(b_max)) > b0) b_max = b0.get_ui();

  GenerationResult out;
  out.sequence.r = r;
  out.sequence.nu = nu;
  out.sequence.c = (r - 1) * nu;
  out.sequence.mode = mode;
  out.sequence.relatives.push_back(matching_hypergraph(r, nu + 1));

  // Shapes with a sunflowers and no residue, for a = 0..nu.
  std::vector<std::vector<BasicShape>> by_a(nu + 1);
  by_a[0].push_back(detail::empty_shape(r));
  for (std::size_t a = 1; a <= nu; ++a) {
    detail::ShapeSet next(mode, g, caps.state_max);
    for (const auto& s : by_a[a - 1]) detail::add_sunflower(s, petals, caps.vertex_max, next);
    by_a[a] = next.take();
  }
  for (std::size_t a = nu + 1; a-- > 0;) {
    // levels[b] = shapes of F(a, b).
    std::vector<std::vector<BasicShape>> levels{by_a[a]};
    while (levels.size() <= b_max && !levels.back().empty()) {
      detail::ShapeSet next(mode, g, caps.state_max);
      for (const auto& s : levels.back()) detail::add_residue_edge(s, nu - a, petals, caps.vertex_max, g, next);
      levels.push_back(next.take());
    }
    for (std::size_t b = levels.size(); b-- > (a == 0 ? 1 : 0);) {
      for (auto& item : basic_items(levels[b], g)) {
        out.sequence.items.push_back(std::move(item));
        out.levels.emplace_back(a, b);
      }
    }
  }
  out.length_bound_ok = within_length_bound(out.sequence.items.size(), r, nu);
  out.certification = verify_sequence(out.sequence, g);
  return out;
}

}  // namespace ryser

#endif  // RYSER_BASIC_SEQUENCE_HPP
