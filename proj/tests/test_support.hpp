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

// Seeded generators shared by the unit and acceptance tests.

#ifndef RYSER_TESTS_TEST_SUPPORT_HPP
#define RYSER_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "ryser/ryser.hpp"

namespace ryser::testing {

using Rng = std::mt19937_64;

/// Up to `edges` random distinct edges over parts of size `part_size`.
/// Vertices are created on first use, so there are no isolated vertices.
inline PartiteHypergraph random_hypergraph(Rng& rng, std::size_t r, std::size_t edges, std::size_t part_size) {
  PartiteHypergraph h(r);
  std::uniform_int_distribution<std::size_t> pick(0, part_size - 1);
  for (std::size_t tries = 0; h.edge_count() < edges && tries < 20 * edges; ++tries) {
    std::vector<std::string> ids;
    for (std::size_t p = 0; p < r; ++p) ids.push_back(vertex_name(p, pick(rng)));
    for (std::size_t p = 0; p < r; ++p)
      if (!h.find(ids[p])) h.add_vertex(p, ids[p]);
    Edge e(r);
    for (std::size_t p = 0; p < r; ++p) e[p] = h.find(ids[p])->index;
    if (!h.has_edge(e)) h.add_edge(e);
  }
  return h;
}

/// Like random_hypergraph, plus `isolated` extra vertices spread over the parts.
inline PartiteHypergraph with_isolated(PartiteHypergraph h, Rng& rng, std::size_t isolated) {
  std::uniform_int_distribution<std::size_t> part(0, h.r() - 1);
  for (std::size_t i = 0; i < isolated; ++i) h.add_vertex(part(rng), "iso" + std::to_string(i));
  return h;
}

/// Random graph on n vertices; each pair gets an edge with probability p,
/// in a uniform color. Same-pair parallel edges of other colors with
/// probability p_parallel.
inline ColoredMultigraph random_graph(Rng& rng, std::size_t r, std::size_t n, double p, double p_parallel = 0) {
  ColoredMultigraph g(r);
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  std::bernoulli_distribution edge(p), extra(p_parallel);
  std::uniform_int_distribution<std::uint32_t> color(0, static_cast<std::uint32_t>(r - 1));
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v, color(rng));
      if (extra(rng)) g.add_edge(u, v, color(rng));
    }
  return g;
}

inline ColoredMultigraph random_complete(Rng& rng, std::size_t r, std::size_t n) { return random_graph(rng, r, n, 1.0); }

inline ColoredMultigraph monochromatic_complete(std::size_t r, std::size_t n, std::uint32_t color = 0) {
  ColoredMultigraph g(r);
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v, color);
  return g;
}

/// A random hypergraph with matching number exactly nu (by rejection).
inline PartiteHypergraph random_with_nu(Rng& rng, std::size_t r, std::size_t nu, std::size_t max_edges,
                                        std::size_t part_size) {
  std::uniform_int_distribution<std::size_t> edges(1, max_edges);
  while (true) {
    auto h = random_hypergraph(rng, r, edges(rng), part_size);
    if (matching_number(h) == nu) return h;
  }
}

/// A metric family whose metric i is |x_i(a) - x_i(b)| for coordinates x_i.
inline MetricFamily line_metrics(const std::vector<std::vector<Integer>>& coords) {
  MetricFamily mf;
  const std::size_t n = coords.front().size();
  for (std::size_t i = 0; i < n; ++i) mf.vertices.push_back("p" + std::to_string(i));
  for (const auto& xs : coords) {
    DistanceMatrix d(n, std::vector<Rational>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Integer diff = xs[a] - xs[b];
        d[a][b] = Rational(abs(diff));
      }
    mf.dists.push_back(std::move(d));
  }
  return mf;
}

}  // namespace ryser::testing

#endif  // RYSER_TESTS_TEST_SUPPORT_HPP
