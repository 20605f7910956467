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

#include <gtest/gtest.h>

#include <numeric>

#include "test_support.hpp"

namespace ryser {
namespace {

using testing::Rng;

// Two disjoint color-p cliques of size `half` with every cross pair joined
// in the next color, so metric p separates them at the cap.
ColoredMultigraph two_cliques(std::size_t r, std::size_t half, std::uint32_t p) {
  ColoredMultigraph g(r);
  for (std::size_t i = 0; i < 2 * half; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::uint32_t u = 0; u < 2 * half; ++u)
    for (std::uint32_t v = u + 1; v < 2 * half; ++v)
      g.add_edge(u, v, (u < half) == (v < half) ? p : (p + 1) % static_cast<std::uint32_t>(r));
  return g;
}

TEST(IsAbDuality, SingleEdgeAlwaysValid) {
  auto g = testing::monochromatic_complete(3, 4);
  auto mf = graph_metric_family(g);
  std::vector<std::size_t> map{2};
  EXPECT_FALSE(is_ab_duality(single_edge(3), mf, map, Threshold(Rational(0)), Threshold(Rational(100))));
}

TEST(IsAbDuality, DisjointPairTooClose) {
  auto mf = graph_metric_family(two_cliques(2, 2, 0));
  // Points 0 and 1 are at distance 1 in metric 0, so b = 2 fails.
  std::vector<std::size_t> map{0, 1};
  auto bad = is_ab_duality(matching_hypergraph(2, 2), mf, map, Threshold(Rational(1)), Threshold(Rational(2)));
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->clause, DualityViolation::Clause::disjoint_too_close);
  EXPECT_EQ(bad->distance, 1);
}

TEST(IsAbDuality, NotInjective) {
  auto mf = graph_metric_family(two_cliques(2, 2, 0));
  std::vector<std::size_t> map{1, 1};
  auto bad = is_ab_duality(matching_hypergraph(2, 2), mf, map, Threshold(Rational(1)), Threshold(Rational(2)));
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->clause, DualityViolation::Clause::not_injective);
}

TEST(IsAbDuality, RejectsABOutOfOrder) {
  auto mf = graph_metric_family(testing::monochromatic_complete(2, 2));
  std::vector<std::size_t> map{0};
  EXPECT_THROW(is_ab_duality(single_edge(2), mf, map, Threshold(Rational(2)), Threshold(Rational(2))), PreconditionError);
}

TEST(IsAbDuality, CanonicalDualityIntoOwnGraph) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 2 + trial % 3;
    auto h = testing::random_hypergraph(rng, r, 2 + trial % 7, 3);
    auto mf = graph_metric_family(hyper_to_colored(h));
    std::vector<std::size_t> id(h.edge_count());
    std::iota(id.begin(), id.end(), std::size_t{0});
    const auto n = static_cast<long>(h.edge_count());
    auto bad = is_ab_duality(h, mf, id, Threshold(Rational(1)), Threshold(Rational(n)));
    ASSERT_FALSE(bad) << h.str() << ": " << bad->describe();
  }
}

TEST(FindAbDual, Examples) {
  auto mf = graph_metric_family(two_cliques(2, 3, 0));
  auto e = find_ab_dual(single_edge(2), mf, Threshold(Rational(1)), Threshold(Rational(6)));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->map, std::vector<std::size_t>{0});
  // Any two points are 1 apart in one of the metrics (same clique in the
  // first, opposite cliques in the second), so M_{2,2} has no dual at b = 2.
  EXPECT_FALSE(find_ab_dual(matching_hypergraph(2, 2), mf, Threshold(Rational(1)), Threshold(Rational(2))));
}

TEST(FindAbDual, TwoCliquesAtTheCap) {
  // Second color empty: every pair sits at the cap there, and the first
  // color separates the cliques at the cap too.
  ColoredMultigraph g(2);
  for (int i = 0; i < 6; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::uint32_t u = 0; u < 6; ++u)
    for (std::uint32_t v = u + 1; v < 6; ++v)
      if ((u < 3) == (v < 3)) g.add_edge(u, v, 0);
  auto mf = graph_metric_family(g);
  auto d = find_ab_dual(matching_hypergraph(2, 2), mf, Threshold(Rational(1)), Threshold(Rational(6)));
  ASSERT_TRUE(d);
  EXPECT_FALSE(is_ab_duality(*d));
  EXPECT_NE(d->map[0] < 3, d->map[1] < 3);
}

TEST(FindAbDual, CompleteAgainstOracle) {
  Rng rng(42);
  std::uniform_int_distribution<int> ab(0, 4);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t r = 2 + trial % 2;
    auto h = testing::random_hypergraph(rng, r, 1 + trial % 4, 2);
    auto g = testing::random_graph(rng, r, 2 + trial % 7, 0.4);
    auto mf = graph_metric_family(g);
    long a = ab(rng), b = a + 1 + ab(rng);
    auto found = find_ab_dual(h, mf, Threshold(Rational(a)), Threshold(Rational(b)));
    ASSERT_EQ(found.has_value(), oracle_has_dual(h, mf, Rational(a), Rational(b))) << h.str();
    if (found) ASSERT_FALSE(is_ab_duality(*found));
  }
}

TEST(FindAbDual, GuardRefuses) {
  auto mf = graph_metric_family(testing::monochromatic_complete(2, 3));
  Guards g;
  g.max_dual_edges = 1;
  EXPECT_THROW(find_ab_dual(matching_hypergraph(2, 2), mf, Threshold(Rational(1)), Threshold(Rational(2)), g),
               GuardExceeded);
}

TEST(AbDualWeakening, MonotoneInParametersAndContainment) {
  Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 2 + trial % 2;
    auto h = testing::random_hypergraph(rng, r, 2 + trial % 4, 2);
    auto mf = graph_metric_family(testing::random_graph(rng, r, 4 + trial % 6, 0.3));
    auto d = find_ab_dual(h, mf, Threshold(Rational(1)), Threshold(Rational(static_cast<long>(mf.size()))));
    if (!d) continue;
    // Weakening: every (a', b') with a <= a' < b' <= b.
    const long n = static_cast<long>(mf.size());
    for (long a2 = 1; a2 < n; ++a2)
      for (long b2 = a2 + 1; b2 <= n; ++b2)
        ASSERT_FALSE(is_ab_duality(h, mf, d->map, Threshold(Rational(a2)), Threshold(Rational(b2))));
    // Restriction: every edge subset.
    for (std::uint32_t mask = 1; mask < (1u << h.edge_count()); ++mask) {
      PartiteHypergraph sub(r);
      for (std::size_t p = 0; p < r; ++p)
        for (const auto& nm : h.part_names(p)) sub.add_vertex(p, nm);
      std::vector<std::size_t> map;
      for (std::size_t e = 0; e < h.edge_count(); ++e)
        if (mask >> e & 1u) {
          sub.add_edge(h.edge(e));
          map.push_back(d->map[e]);
        }
      ASSERT_FALSE(is_ab_duality(sub, mf, map, d->a, d->b));
    }
  }
}

}  // namespace
}  // namespace ryser
