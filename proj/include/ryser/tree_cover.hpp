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

// Covers of a colored graph by monochromatic trees.
//
// The metric engine always runs and its step history is recorded. Its balls
// have radius far above |V(G)|, so on any graph that fits in memory they are
// the whole vertex set and carry no component structure. Below the engine
// bound 2 * 9^{(4r)^{ell+3}} the trees therefore come from the component
// cover given by the stable sequence on the component hypergraph, which is
// exactly the small-graph case of the argument. Among component covers no
// larger than that one, the cover with the smallest worst component diameter
// is kept. Each component becomes a breadth-first tree rooted at a center.
//
// Above the bound (unreachable in practice, kept for completeness) each ball
// lies inside one color component and becomes a breadth-first tree directly.

#ifndef RYSER_TREE_COVER_HPP
#define RYSER_TREE_COVER_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "ryser/bundled.hpp"
#include "ryser/colored_graph.hpp"
#include "ryser/duality.hpp"
#include "ryser/metrics.hpp"
#include "ryser/schedule.hpp"
#include "ryser/stability.hpp"
#include "ryser/transference.hpp"

namespace ryser {

struct MonoTree {
  std::uint32_t color = 0;
  std::uint32_t root = 0;
  std::vector<std::uint32_t> vertices;            // ascending
  std::map<std::uint32_t, std::uint32_t> parent;  // every vertex but the root
  Rational certified_radius;
  std::size_t measured_diameter = 0;  // max color distance between tree vertices
  std::size_t tree_diameter = 0;      // diameter of the tree itself
  std::size_t eccentricity = 0;       // depth of the tree from its root
};

struct TreeCover {
  std::size_t r = 2, nu = 1;
  std::vector<MonoTree> trees;
  bool small_graph = true;
  ScheduleMode mode = ScheduleMode::paper;
  std::size_t ell = 0;
  std::vector<HistoryEntry> steps;
  std::size_t engine_radius_bits = 0;
  std::string engine_bound;
  std::optional<std::size_t> sequence_item;
};

namespace detail {

// BFS inside `allowed` along color edges; dist -1 means unreached.
inline std::pair<std::vector<long>, std::vector<std::uint32_t>> color_bfs(
    const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t root, const std::vector<bool>& allowed) {
  std::vector<long> dist(adj.size(), -1);
  std::vector<std::uint32_t> par(adj.size(), UINT32_MAX);
  std::queue<std::uint32_t> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    for (auto y : adj[x])
      if (allowed[y] && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        par[y] = x;
        q.push(y);
      }
  }
  return {dist, par};
}

inline std::vector<bool> mask_of(std::size_t n, const std::vector<std::uint32_t>& vs) {
  std::vector<bool> m(n, false);
  for (auto v : vs) m[v] = true;
  return m;
}

// Breadth-first tree of a connected vertex set rooted at its first
// minimum-eccentricity vertex.
inline MonoTree centered_tree(const ColoredMultigraph& g, std::uint32_t color, std::vector<std::uint32_t> vs) {
  std::sort(vs.begin(), vs.end());
  const auto adj = g.color_adjacency(color);
  const auto allowed = mask_of(g.vertex_count(), vs);
  MonoTree t;
  t.color = color;
  t.vertices = vs;
  std::size_t best = SIZE_MAX;
  for (auto u : vs) {
    auto [dist, par] = color_bfs(adj, u, allowed);
    std::size_t ecc = 0;
    for (auto w : vs) {
      if (dist[w] < 0) throw InternalError("tree cover: component is not connected in its color");
      ecc = std::max<std::size_t>(ecc, static_cast<std::size_t>(dist[w]));
    }
    if (ecc < best) {
      best = ecc;
      t.root = u;
      t.eccentricity = ecc;
      t.parent.clear();
      for (auto w : vs)
        if (w != u) t.parent[w] = par[w];
    }
  }
  // Measured in the full color class, as the certificate checker does.
  const std::vector<bool> everywhere(g.vertex_count(), true);
  for (auto u : vs) {
    auto dist = color_bfs(adj, u, everywhere).first;
    for (auto w : vs) t.measured_diameter = std::max<std::size_t>(t.measured_diameter, static_cast<std::size_t>(dist[w]));
  }
  // Tree diameter by two sweeps over tree edges.
  std::vector<std::vector<std::uint32_t>> tadj(g.vertex_count());
  for (auto [w, p] : t.parent) {
    tadj[w].push_back(p);
    tadj[p].push_back(w);
  }
  auto far = [&](std::uint32_t s) {
    auto [d, par] = color_bfs(tadj, s, allowed);
    std::uint32_t arg = s;
    for (auto w : vs)
      if (d[w] > d[arg]) arg = w;
    return std::make_pair(arg, static_cast<std::size_t>(d[arg]));
  };
  t.tree_diameter = far(far(t.root).first).second;
  return t;
}

struct ComponentChoice {
  std::uint32_t color;
  std::vector<std::uint32_t> members;
  std::size_t diameter;
};

// Searches component covers of at most `limit` components for the least
// worst-case diameter, then fewest components.
inline std::optional<std::vector<ComponentChoice>> best_component_cover(const ColoredMultigraph& g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  const std::size_t r = g.r();
  if (std::pow(static_cast<double>(r), static_cast<double>(limit)) > 1e6) return std::nullopt;
  std::vector<std::vector<std::uint32_t>> label(r);
  std::vector<std::vector<std::vector<std::uint32_t>>> comps(r);
  std::vector<std::vector<std::size_t>> diam(r);
  for (std::uint32_t c = 0; c < r; ++c) {
    label[c] = g.component_labels(c);
    comps[c] = g.components(c);
    auto adj = g.color_adjacency(c);
    for (const auto& comp : comps[c]) {
      auto allowed = mask_of(n, comp);
      std::size_t d = 0;
      for (auto u : comp) {
        auto dist = color_bfs(adj, u, allowed).first;
        for (auto w : comp) d = std::max<std::size_t>(d, static_cast<std::size_t>(dist[w]));
      }
      diam[c].push_back(d);
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cur, best;
  std::size_t best_diam = SIZE_MAX;
  std::vector<int> hits(n, 0);
  auto rec = [&](auto&& self, std::size_t worst) -> void {
    if (worst > best_diam) return;
    std::size_t v = 0;
    while (v < n && hits[v] > 0) ++v;
    if (v == n) {
      if (worst < best_diam || (worst == best_diam && cur.size() < best.size())) {
        best_diam = worst;
        best = cur;
      }
      return;
    }
    if (cur.size() == limit) return;
    for (std::uint32_t c = 0; c < r; ++c) {
      auto id = label[c][v];
      cur.push_back({c, id});
      for (auto w : comps[c][id]) ++hits[w];
      self(self, std::max(worst, diam[c][id]));
      for (auto w : comps[c][id]) --hits[w];
      cur.pop_back();
    }
  };
  rec(rec, 0);
  if (best_diam == SIZE_MAX) return std::nullopt;
  std::vector<ComponentChoice> out;
  for (auto [c, id] : best) out.push_back({c, comps[c][id], diam[c][id]});
  return out;
}

}  // namespace detail

/// Covers G by at most (r-1)nu monochromatic trees. Requires alpha(G) <= nu;
/// otherwise raises PremiseViolation with nu+1 independent vertices.
inline TreeCover tree_cover(const ColoredMultigraph& g, const StableSequence& seq, const ParameterSchedule& sched,
                            const Guards& guards = {}) {
  if (g.r() != seq.r) throw PreconditionError("tree_cover: graph has " + std::to_string(g.r()) +
                                              " colors, sequence has r = " + std::to_string(seq.r));
  TreeCover out;
  out.r = seq.r;
  out.nu = seq.nu;
  out.mode = sched.mode;
  out.ell = sched.ell;
  out.engine_bound = engine_bound_string(seq.r, sched.ell);
  const std::size_t n = g.vertex_count();
  if (n == 0) return out;
  auto indep = maximum_independent_set(g, guards);
  if (indep.size() > seq.nu) {
    indep.resize(seq.nu + 1);
    throw PremiseViolation("independence number exceeds " + std::to_string(seq.nu), std::move(indep));
  }
  const auto mf = graph_metric_family(g);
  auto engine = ball_cover(mf, seq, sched, false, guards);
  out.steps = engine.history;
  Rational engine_radius = engine.balls.empty() ? Rational(0) : engine.balls.front().radius;
  out.engine_radius_bits = bit_length(engine_radius.get_num());
  const Rational cap(static_cast<long>(n - 1));
  const Rational certified = engine_radius < cap ? engine_radius : cap;

  out.small_graph = within_engine_bound(n, seq.r, sched.ell);
  if (out.small_graph) {
    auto ch = colored_to_hyper(g);
    Guards wide = guards;
    wide.max_search_edges = std::max(guards.max_search_edges, ch.hypergraph.edge_count());
    auto sc = cover_from_sequence(ch.hypergraph, seq, wide);
    out.sequence_item = sc.item;
    std::vector<detail::ComponentChoice> chosen;
    if (auto best = detail::best_component_cover(g, sc.cover.size())) {
      chosen = std::move(*best);
    } else {
      for (const auto& v : sc.cover) chosen.push_back({v.part, ch.members[v.part][v.index], 0});
    }
    for (auto& cc : chosen) {
      auto t = detail::centered_tree(g, cc.color, cc.members);
      t.certified_radius = certified;
      out.trees.push_back(std::move(t));
    }
  } else {
    for (const auto& b : engine.balls) {
      auto label = g.component_labels(static_cast<std::uint32_t>(b.metric));
      for (auto v : b.members)
        if (label[v] != label[b.center]) throw InternalError("tree_cover: ball leaves its color component");
      auto t = detail::centered_tree(g, static_cast<std::uint32_t>(b.metric), b.members);
      t.certified_radius = certified;
      out.trees.push_back(std::move(t));
    }
  }
  return out;
}

/// Independent re-check of a tree cover against its graph. Every parent edge
/// must exist in the tree's color and lead to the root; the trees must cover
/// V within the (r-1)nu budget with correctly reported diameters.
inline std::optional<std::string> validate_tree_cover(const ColoredMultigraph& g, const TreeCover& tc) {
  const std::size_t n = g.vertex_count();
  if (tc.r != g.r()) return "r differs from the graph";
  if (tc.trees.size() > (tc.r - 1) * tc.nu) return "more than (r-1)nu trees";
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < tc.trees.size(); ++i) {
    const auto& t = tc.trees[i];
    const std::string at = "tree " + std::to_string(i + 1) + ": ";
    if (t.color >= g.r()) return at + "color out of range";
    if (t.root >= n) return at + "root out of range";
    std::vector<bool> in(n, false);
    in[t.root] = true;
    for (auto [v, p] : t.parent) {
      if (v >= n || p >= n) return at + "vertex out of range";
      if (v == t.root) return at + "root has a parent";
      in[v] = true;
    }
    for (auto [v, p] : t.parent) {
      if (!in[p]) return at + "parent outside the tree";
      if (!g.has_edge(v, p, t.color)) return at + "edge " + g.name(v) + "-" + g.name(p) + " is not in the tree color";
      std::uint32_t x = v;
      for (std::size_t steps = 0; x != t.root; ++steps) {
        if (steps > n) return at + "parent pointers form a cycle";
        x = t.parent.at(x);
      }
    }
    std::vector<std::uint32_t> vs;
    for (std::uint32_t v = 0; v < n; ++v)
      if (in[v]) {
        vs.push_back(v);
        seen[v] = true;
      }
    if (!t.vertices.empty() && t.vertices != vs) return at + "vertex list disagrees with parents";
    auto adj = g.color_adjacency(t.color);
    std::vector<bool> all(n, true);
    std::size_t diam = 0;
    for (auto u : vs) {
      auto dist = detail::color_bfs(adj, u, all).first;
      for (auto w : vs) diam = std::max<std::size_t>(diam, static_cast<std::size_t>(dist[w]));
    }
    if (diam != t.measured_diameter) return at + "measured diameter is " + std::to_string(diam);
    if (Rational(static_cast<long>(diam)) > 2 * t.certified_radius) return at + "diameter exceeds twice the radius";
    if (n > 0 && diam > 2 * (n - 1)) return at + "diameter exceeds 2(n-1)";
  }
  for (std::uint32_t v = 0; v < n; ++v)
    if (!seen[v]) return "vertex " + g.name(v) + " is not covered";
  return std::nullopt;
}

/// The sequence to use for (r, alpha): the bundled one, else Unsupported.
inline StableSequence sequence_for(std::size_t r, std::size_t alpha) {
  auto s = bundled_sequence(r, alpha);
  if (!s)
    throw Unsupported("unsupported (r, alpha) = (" + std::to_string(r) + "," + std::to_string(alpha) +
                      "); bundled pairs: " + bundled_pairs_string());
  return *s;
}

/// Whole pipeline: computes alpha(G), then covers with the matching sequence.
inline TreeCover end_to_end(const ColoredMultigraph& g, ScheduleMode mode = ScheduleMode::paper,
                            const Guards& guards = {}) {
  if (g.vertex_count() == 0) {
    TreeCover tc;
    tc.r = g.r();
    tc.nu = 0;
    return tc;
  }
  const std::size_t alpha = independence_number(g, guards);
  auto seq = sequence_for(g.r(), alpha);
  const auto& sched = cached_schedule(seq.r, seq.items.size(), mode);
  return tree_cover(g, seq, sched, guards);
}

}  // namespace ryser

#endif  // RYSER_TREE_COVER_HPP
