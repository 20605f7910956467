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

#ifndef RYSER_ABDUAL_HPP
#define RYSER_ABDUAL_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ryser/exact.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/metrics.hpp"

namespace ryser {

/// An injection from the edges of a hypergraph into the points of a metric
/// family, together with its parameters (a, b).
struct DualityEmbedding {
  PartiteHypergraph hypergraph;
  const MetricFamily* family = nullptr;
  std::vector<std::size_t> map;  // edge index -> point index
  Threshold a, b;
};

struct DualityViolation {
  enum class Clause { not_injective, intersecting_too_far, disjoint_too_close } clause;
  std::size_t e = 0, f = 0, part = 0;
  Rational distance;

  std::string describe() const {
    switch (clause) {
      case Clause::not_injective:
        return "edges " + std::to_string(e) + " and " + std::to_string(f) + " share an image";
      case Clause::intersecting_too_far:
        return "edges " + std::to_string(e) + "," + std::to_string(f) + " meet in part " + std::to_string(part + 1) +
               " but d = " + distance.get_str() + " > a";
      case Clause::disjoint_too_close:
        return "edges " + std::to_string(e) + "," + std::to_string(f) + " differ in part " + std::to_string(part + 1) +
               " but d = " + distance.get_str() + " < b";
    }
    return {};
  }
};

namespace detail {

inline std::optional<DualityViolation> check_pair(const PartiteHypergraph& h, const MetricFamily& mf,
                                                  std::span<const std::size_t> map, std::size_t e, std::size_t f,
                                                  const Threshold& a, const Threshold& b) {
  using C = DualityViolation::Clause;
  if (map[e] == map[f]) return DualityViolation{C::not_injective, e, f, 0, Rational(0)};
  for (std::size_t p = 0; p < h.r(); ++p) {
    const Rational& d = mf.d(p, map[e], map[f]);
    if (h.edge(e)[p] == h.edge(f)[p]) {
      if (compare(d, a) > 0) return DualityViolation{C::intersecting_too_far, e, f, p, d};
    } else if (compare(d, b) < 0) {
      return DualityViolation{C::disjoint_too_close, e, f, p, d};
    }
  }
  return std::nullopt;
}

inline void check_dual_shapes(const PartiteHypergraph& h, const MetricFamily& mf, const Threshold& a,
                              const Threshold& b) {
  if (h.r() != mf.r()) throw PreconditionError("duality: hypergraph r differs from number of metrics");
  if (compare(a, b) >= 0) throw PreconditionError("duality: requires a < b");
}

}  // namespace detail

/// Validates an (a, b)-duality. Edges meeting in part i must map within a in
/// metric i; edges differing there must map at least b apart. Returns the
/// first violation in (e, f, part) order, or nothing when valid.
inline std::optional<DualityViolation> is_ab_duality(const PartiteHypergraph& h, const MetricFamily& mf,
                                                     std::span<const std::size_t> map, const Threshold& a,
                                                     const Threshold& b) {
  detail::check_dual_shapes(h, mf, a, b);
  if (map.size() != h.edge_count()) throw PreconditionError("duality: map must cover every edge");
  for (auto v : map)
    if (v >= mf.size()) throw PreconditionError("duality: image outside V");
  for (std::size_t e = 0; e < h.edge_count(); ++e)
    for (std::size_t f = e + 1; f < h.edge_count(); ++f)
      if (auto bad = detail::check_pair(h, mf, map, e, f, a, b)) return bad;
  return std::nullopt;
}

inline std::optional<DualityViolation> is_ab_duality(const DualityEmbedding& d) {
  if (!d.family) throw PreconditionError("duality: no metric family attached");
  return is_ab_duality(d.hypergraph, *d.family, d.map, d.a, d.b);
}

/// Backtracking search for an (a, b)-duality. Edges go in by descending
/// degree sum; a partial map is abandoned at the first violated pair. Returns the first valid map in that order.
inline std::optional<DualityEmbedding> find_ab_dual(const PartiteHypergraph& h, const MetricFamily& mf,
                                                    const Threshold& a, const Threshold& b, const Guards& g = {}) {
  detail::check_dual_shapes(h, mf, a, b);
  if (h.edge_count() > g.max_dual_edges || mf.size() > g.max_dual_vertices)
    throw GuardExceeded("find_ab_dual: instance exceeds guard");
  const std::size_t m = h.edge_count();
  std::vector<std::size_t> degree_sum(m, 0);
  for (std::size_t e = 0; e < m; ++e)
    for (const auto& v : h.edge_vertices(e)) degree_sum[e] += h.degree(v);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return degree_sum[x] > degree_sum[y]; });

  std::vector<std::size_t> map(m, SIZE_MAX);
  std::vector<bool> used(mf.size(), false);
  auto recurse = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == m) return true;
    const std::size_t e = order[depth];
    for (std::size_t v = 0; v < mf.size(); ++v) {
      if (used[v]) continue;
      map[e] = v;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) ok = !detail::check_pair(h, mf, map, order[k], e, a, b);
      if (ok) {
        used[v] = true;
        if (self(self, depth + 1)) return true;
        used[v] = false;
      }
    }
    map[e] = SIZE_MAX;
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return DualityEmbedding{h, &mf, map, a, b};
}

}  // namespace ryser

#endif  // RYSER_ABDUAL_HPP
