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

// Slow reference implementations. None of them shares code with the search
// routines they check: each enumerates its whole space directly.

#ifndef RYSER_ORACLES_HPP
#define RYSER_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ryser/colored_graph.hpp"
#include "ryser/exact.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/metrics.hpp"

namespace ryser {

/// nu(H) over all edge subsets.
inline std::size_t oracle_matching_number(const PartiteHypergraph& h) {
  const std::size_t m = h.edge_count();
  if (m > 20) throw GuardExceeded("oracle_matching_number: more than 20 edges");
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    std::set<VertexRef> used;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      if (s >> i & 1u)
        for (const auto& v : h.edge_vertices(i)) ok = ok && used.insert(v).second;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

/// tau(H) over all vertex subsets.
inline std::size_t oracle_cover_number(const PartiteHypergraph& h) {
  auto vs = h.vertices();
  if (vs.size() > 22) throw GuardExceeded("oracle_cover_number: more than 22 vertices");
  std::size_t best = vs.size();
  for (std::uint32_t s = 0; s < (1u << vs.size()); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) >= best) continue;
    std::vector<VertexRef> c;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (s >> i & 1u) c.push_back(vs[i]);
    if (h.covered_by(c)) best = c.size();
  }
  return best;
}

/// alpha(G) over all vertex subsets.
inline std::size_t oracle_independence_number(const ColoredMultigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 22) throw GuardExceeded("oracle_independence_number: more than 22 vertices");
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<std::uint32_t> set;
    for (std::uint32_t i = 0; i < n; ++i)
      if (s >> i & 1u) set.push_back(i);
    if (set.size() > best && is_independent_set(g, set)) best = set.size();
  }
  return best;
}

/// Copy containment by trying every part permutation and every injective
/// assignment of pattern edges to host edges, then checking that the induced
/// vertex correspondence is a well-defined injection.
inline bool oracle_contains_copy(const PartiteHypergraph& host, const PartiteHypergraph& pattern,
                                 bool permute_parts = true) {
  const std::size_t r = host.r();
  if (pattern.r() != r) return false;
  const std::size_t pm = pattern.edge_count(), hm = host.edge_count();
  if (pm == 0) return true;
  if (pm > hm) return false;
  if (hm > 16 || pm > 8) throw GuardExceeded("oracle_contains_copy: instance too large");
  std::vector<std::size_t> sigma(r);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    std::vector<std::size_t> assign(pm);
    std::vector<bool> used(hm, false);
    // Edge i agrees with every earlier edge on which parts they share.
    auto agrees = [&](std::size_t i) {
      for (std::size_t j = 0; j < i; ++j)
        for (std::size_t p = 0; p < r; ++p) {
          bool same_p = pattern.edge(i)[p] == pattern.edge(j)[p];
          bool same_h = host.edge(assign[i])[sigma[p]] == host.edge(assign[j])[sigma[p]];
          if (same_p != same_h) return false;
        }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> bool {
      if (i == pm) return true;
      for (std::size_t j = 0; j < hm; ++j) {
        if (used[j]) continue;
        assign[i] = j;
        if (!agrees(i)) continue;
        used[j] = true;
        if (self(self, i + 1)) return true;
        used[j] = false;
      }
      return false;
    };
    if (rec(rec, 0)) return true;
  } while (permute_parts && std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

struct SupersetVerdict {
  bool ok = true;
  std::optional<PartiteHypergraph> failing;  // a smallest uncovered superset with no pattern
};

/// The stability definition checked on every superset obtained by adding
/// up to `depth` edges. Each added edge may use any existing vertex or at
/// most one fresh vertex per part; fresh vertices stay available to later
/// added edges. Supersets covered by C pass; the rest must contain a pattern.
inline SupersetVerdict oracle_superset_stability(const PartiteHypergraph& h, std::span<const VertexRef> cover,
                                                 std::span<const PartiteHypergraph> patterns, std::size_t depth = 2,
                                                 bool permute_parts = true) {
  if (depth > 2) throw GuardExceeded("oracle_superset_stability: depth must be <= 2");
  if (h.edge_count() > 6) throw GuardExceeded("oracle_superset_stability: more than 6 edges");
  const std::size_t r = h.r();
  SupersetVerdict verdict;
  // 0 = fails, 1 = covered, 2 = contains a pattern (so does every superset).
  auto examine = [&](const PartiteHypergraph& sup) {
    for (const auto& p : patterns)
      if (oracle_contains_copy(sup, p, permute_parts)) return 2;
    return sup.covered_by(cover) ? 1 : 0;
  };
  auto add_all = [&](const PartiteHypergraph& base, std::size_t level, auto&& self) -> void {
    if (!verdict.ok || level == depth) return;
    std::vector<std::size_t> pos(r, 0);
    while (true) {
      PartiteHypergraph sup = base;
      Edge e(r);
      for (std::size_t p = 0; p < r; ++p) {
        if (pos[p] < base.part_size(p)) {
          e[p] = static_cast<std::uint32_t>(pos[p]);
        } else {
          std::string nm = "o" + std::to_string(p + 1) + "." + std::to_string(sup.part_size(p));
          while (sup.find(nm)) nm += "'";
          e[p] = sup.add_vertex(p, nm).index;
        }
      }
      if (!sup.has_edge(e)) {
        sup.add_edge(e);
        int res = examine(sup);
        if (res == 0) {
          verdict.ok = false;
          verdict.failing = sup;
          return;
        }
        if (res == 1) self(sup, level + 1, self);
        if (!verdict.ok) return;
      }
      std::size_t p = 0;
      while (p < r && ++pos[p] == base.part_size(p) + 1) pos[p++] = 0;
      if (p == r) break;
    }
  };
  add_all(h, 0, add_all);
  return verdict;
}

/// Minimum number of monochromatic components covering V(G), by exact set
/// cover over the distinct components (dominated ones dropped).
inline std::size_t oracle_min_component_cover(const ColoredMultigraph& g, const Guards& guards = {}) {
  const std::size_t n = g.vertex_count();
  if (n > guards.max_oracle_vertices || n > 64)
    throw GuardExceeded("oracle_min_component_cover: more than " + std::to_string(guards.max_oracle_vertices) +
                        " vertices");
  if (n == 0) return 0;
  std::set<std::uint64_t> distinct;
  for (std::uint32_t c = 0; c < g.r(); ++c)
    for (const auto& comp : g.components(c)) {
      std::uint64_t mask = 0;
      for (auto v : comp) mask |= 1ULL << v;
      distinct.insert(mask);
    }
  std::vector<std::uint64_t> sets;
  for (auto s : distinct) {
    bool dominated = false;
    for (auto t : distinct) dominated = dominated || (t != s && (s & t) == s);
    if (!dominated) sets.push_back(s);
  }
  if (sets.size() > guards.max_oracle_components)
    throw GuardExceeded("oracle_min_component_cover: " + std::to_string(sets.size()) + " components exceed guard");
  const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
  // Subsets by increasing size; this is the plain exhaustive set cover.
  for (std::size_t k = 1; k <= sets.size(); ++k) {
    std::vector<bool> pick(sets.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::uint64_t u = 0;
      for (std::size_t i = 0; i < sets.size(); ++i)
        if (pick[i]) u |= sets[i];
      if (u == all) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw InternalError("oracle_min_component_cover: components do not cover V");
}

/// Whether some injection E(H) -> V is an (a, b)-duality, by trying them all.
inline bool oracle_has_dual(const PartiteHypergraph& h, const MetricFamily& mf, const Rational& a, const Rational& b) {
  const std::size_t m = h.edge_count(), n = mf.size();
  if (m > 6 || n > 10) throw GuardExceeded("oracle_has_dual: instance too large");
  std::vector<std::size_t> img(m);
  std::vector<bool> used(n, false);
  auto valid = [&]() {
    for (std::size_t e = 0; e < m; ++e)
      for (std::size_t f = e + 1; f < m; ++f)
        for (std::size_t p = 0; p < h.r(); ++p) {
          const Rational& d = mf.d(p, img[e], img[f]);
          bool meet = h.edge(e)[p] == h.edge(f)[p];
          if (meet && d > a) return false;
          if (!meet && d < b) return false;
        }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) return valid();
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      img[i] = v;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace ryser

#endif  // RYSER_ORACLES_HPP
