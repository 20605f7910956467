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

#ifndef RYSER_EMBEDDING_HPP
#define RYSER_EMBEDDING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ryser/hypergraph.hpp"

namespace ryser {

/// Whether a copy may relabel parts. Colors are symmetric, so permuting is the
/// default everywhere.
enum class CopyMode { part_respecting, part_permuting };

/// A copy of a pattern inside a host: pattern part i lands in host part
/// part_map[i]; isolated pattern vertices are not mapped.
struct HyperEmbedding {
  std::vector<std::size_t> part_map;
  std::vector<std::vector<std::uint32_t>> vertex_map;
  std::vector<std::size_t> edge_map;

  static constexpr std::uint32_t unmapped = UINT32_MAX;

  std::optional<VertexRef> image(VertexRef v) const {
    auto w = vertex_map.at(v.part).at(v.index);
    if (w == unmapped) return std::nullopt;
    return VertexRef{static_cast<std::uint32_t>(part_map[v.part]), w};
  }
};

/// Optional labels that a copy must preserve, used to separate structurally
/// different roles (residue edges, core vertices) during shape enumeration.
struct CopyLabels {
  std::vector<int> host_edges, pattern_edges;
  std::vector<std::vector<int>> host_vertices, pattern_vertices;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> part_permutations(std::size_t r, CopyMode mode) {
  std::vector<std::size_t> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  if (mode == CopyMode::part_respecting) return {sigma};
  do out.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

inline std::vector<std::vector<std::size_t>> degree_table(const PartiteHypergraph& h) {
  std::vector<std::vector<std::size_t>> deg(h.r());
  for (std::size_t p = 0; p < h.r(); ++p) deg[p].assign(h.part_size(p), 0);
  for (const auto& e : h.edges())
    for (std::size_t p = 0; p < h.r(); ++p) ++deg[p][e[p]];
  return deg;
}

class CopySearch {
 public:
  CopySearch(const PartiteHypergraph& host, const PartiteHypergraph& pattern, const CopyLabels* labels)
      : host_(host), pat_(pattern), labels_(labels),
        host_deg_(degree_table(host)), pat_deg_(degree_table(pattern)) {
    order_edges();
  }

  std::optional<HyperEmbedding> run(CopyMode mode) {
    if (pat_.edge_count() > host_.edge_count()) return std::nullopt;
    for (const auto& sigma : part_permutations(pat_.r(), mode)) {
      if (!counts_fit(sigma)) continue;
      sigma_ = sigma;
      fwd_.assign(pat_.r(), {});
      inv_.assign(host_.r(), {});
      for (std::size_t p = 0; p < pat_.r(); ++p) fwd_[p].assign(pat_.part_size(p), HyperEmbedding::unmapped);
      for (std::size_t p = 0; p < host_.r(); ++p) inv_[p].assign(host_.part_size(p), HyperEmbedding::unmapped);
      edge_map_.assign(pat_.edge_count(), SIZE_MAX);
      if (recurse(0)) return HyperEmbedding{sigma_, fwd_, edge_map_};
    }
    return std::nullopt;
  }

 private:
  // Most constrained first: start from the largest degree sum, then always
  // take the edge sharing most vertices with already placed edges.
  void order_edges() {
    const std::size_t m = pat_.edge_count();
    std::vector<bool> placed(m, false);
    std::vector<std::vector<bool>> seen(pat_.r());
    for (std::size_t p = 0; p < pat_.r(); ++p) seen[p].assign(pat_.part_size(p), false);
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t best = SIZE_MAX, best_shared = 0, best_deg = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (placed[i]) continue;
        std::size_t shared = 0, deg = 0;
        for (std::size_t p = 0; p < pat_.r(); ++p) {
          shared += seen[p][pat_.edge(i)[p]];
          deg += pat_deg_[p][pat_.edge(i)[p]];
        }
        if (best == SIZE_MAX || shared > best_shared || (shared == best_shared && deg > best_deg)) {
          best = i;
          best_shared = shared;
          best_deg = deg;
        }
      }
      placed[best] = true;
      for (std::size_t p = 0; p < pat_.r(); ++p) seen[p][pat_.edge(best)[p]] = true;
      order_.push_back(best);
    }
  }

  bool counts_fit(const std::vector<std::size_t>& sigma) const {
    for (std::size_t p = 0; p < pat_.r(); ++p) {
      std::size_t need = 0, have = 0;
      for (auto d : pat_deg_[p]) need += d > 0;
      for (auto d : host_deg_[sigma[p]]) have += d > 0;
      if (need > have) return false;
    }
    return true;
  }

  bool edge_label_ok(std::size_t pe, std::size_t he) const {
    if (!labels_ || labels_->pattern_edges.empty()) return true;
    return labels_->pattern_edges[pe] == labels_->host_edges[he];
  }

  bool vertex_label_ok(std::size_t p, std::uint32_t u, std::size_t hp, std::uint32_t w) const {
    if (!labels_ || labels_->pattern_vertices.empty()) return true;
    return labels_->pattern_vertices[p][u] == labels_->host_vertices[hp][w];
  }

  bool recurse(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t pe = order_[depth];
    const Edge& pedge = pat_.edge(pe);
    for (std::size_t he = 0; he < host_.edge_count(); ++he) {
      if (!edge_label_ok(pe, he)) continue;
      const Edge& hedge = host_.edge(he);
      bool ok = true;
      for (std::size_t p = 0; p < pat_.r() && ok; ++p) {
        const std::size_t hp = sigma_[p];
        const std::uint32_t u = pedge[p], w = hedge[hp];
        if (fwd_[p][u] != HyperEmbedding::unmapped) {
          ok = fwd_[p][u] == w;
        } else {
          ok = inv_[hp][w] == HyperEmbedding::unmapped && pat_deg_[p][u] <= host_deg_[hp][w] &&
               vertex_label_ok(p, u, hp, w);
        }
      }
      if (!ok) continue;
      std::vector<std::size_t> fresh;
      for (std::size_t p = 0; p < pat_.r(); ++p) {
        if (fwd_[p][pedge[p]] == HyperEmbedding::unmapped) {
          fwd_[p][pedge[p]] = hedge[sigma_[p]];
          inv_[sigma_[p]][hedge[sigma_[p]]] = pedge[p];
          fresh.push_back(p);
        }
      }
      edge_map_[pe] = he;
      if (recurse(depth + 1)) return true;
      edge_map_[pe] = SIZE_MAX;
      for (auto p : fresh) {
        inv_[sigma_[p]][hedge[sigma_[p]]] = HyperEmbedding::unmapped;
        fwd_[p][pedge[p]] = HyperEmbedding::unmapped;
      }
    }
    return false;
  }

  const PartiteHypergraph& host_;
  const PartiteHypergraph& pat_;
  const CopyLabels* labels_;
  std::vector<std::vector<std::size_t>> host_deg_, pat_deg_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> sigma_;
  std::vector<std::vector<std::uint32_t>> fwd_, inv_;
  std::vector<std::size_t> edge_map_;
};

}  // namespace detail

/// Finds a copy of `pattern` inside `host`: an injective map on the
/// non-isolated pattern vertices carrying every pattern edge onto a host
/// edge, part i going to part sigma(i). Deterministic: permutations are
/// tried in lexicographic order and host edges by index.
inline std::optional<HyperEmbedding> contains_copy(const PartiteHypergraph& host,
                                                   const PartiteHypergraph& pattern,
                                                   CopyMode mode = CopyMode::part_permuting,
                                                   const Guards& g = {},
                                                   const CopyLabels* labels = nullptr) {
  if (host.r() != pattern.r()) throw PreconditionError("contains_copy: uniformity mismatch");
  if (host.edge_count() > g.max_search_edges || pattern.edge_count() > g.max_search_edges)
    throw GuardExceeded("contains_copy: instance exceeds search guard");
  return detail::CopySearch(host, pattern, labels).run(mode);
}

/// Isomorphism invariant: equal keys are necessary for isomorphism.
inline std::vector<std::size_t> iso_key(const PartiteHypergraph& h, CopyMode mode,
                                        const CopyLabels* labels = nullptr, bool host_side = true) {
  auto deg = detail::degree_table(h);
  std::vector<std::vector<std::size_t>> per_part(h.r());
  for (std::size_t p = 0; p < h.r(); ++p) {
    for (std::size_t i = 0; i < deg[p].size(); ++i) {
      if (deg[p][i] == 0) continue;
      std::size_t tag = deg[p][i] * 8;
      if (labels) {
        const auto& vl = host_side ? labels->host_vertices : labels->pattern_vertices;
        if (!vl.empty()) tag += static_cast<std::size_t>(vl[p][i]) + 1;
      }
      per_part[p].push_back(tag);
    }
    std::sort(per_part[p].begin(), per_part[p].end());
  }
  std::vector<std::vector<std::size_t>> edge_sigs;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    std::vector<std::size_t> sig;
    for (std::size_t p = 0; p < h.r(); ++p) sig.push_back(deg[p][h.edge(i)[p]]);
    if (mode == CopyMode::part_permuting) std::sort(sig.begin(), sig.end());
    if (labels) {
      const auto& el = host_side ? labels->host_edges : labels->pattern_edges;
      if (!el.empty()) sig.push_back(static_cast<std::size_t>(el[i]) + 1000);
    }
    edge_sigs.push_back(std::move(sig));
  }
  std::sort(edge_sigs.begin(), edge_sigs.end());
  if (mode == CopyMode::part_permuting) std::sort(per_part.begin(), per_part.end());
  std::vector<std::size_t> key{h.r(), h.edge_count()};
  for (const auto& pp : per_part) {
    key.push_back(SIZE_MAX);
    key.insert(key.end(), pp.begin(), pp.end());
  }
  for (const auto& s : edge_sigs) {
    key.push_back(SIZE_MAX - 1);
    key.insert(key.end(), s.begin(), s.end());
  }
  return key;
}

/// Isomorphism of hypergraphs after dropping isolated vertices.
inline bool are_isomorphic(const PartiteHypergraph& a, const PartiteHypergraph& b,
                           CopyMode mode = CopyMode::part_permuting, const Guards& g = {}) {
  if (a.r() != b.r() || a.edge_count() != b.edge_count()) return false;
  if (iso_key(a, mode) != iso_key(b, mode)) return false;
  return contains_copy(a, b, mode, g).has_value();
}

}  // namespace ryser

#endif  // RYSER_EMBEDDING_HPP
