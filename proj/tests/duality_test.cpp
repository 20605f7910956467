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

#include "test_support.hpp"

namespace ryser {
namespace {

using testing::random_graph;
using testing::random_hypergraph;
using testing::Rng;

TEST(HyperToColored, Examples) {
  auto g = hyper_to_colored(single_edge(3));
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_TRUE(g.edges().empty());
  auto m = hyper_to_colored(matching_hypergraph(3, 2));
  EXPECT_EQ(m.vertex_count(), 2u);
  EXPECT_TRUE(m.edges().empty());
  auto s = hyper_to_colored(sunflower_hypergraph(3, 1, 2));
  ASSERT_EQ(s.edges().size(), 1u);
  EXPECT_EQ(s.edges()[0].color, 0u);
}

TEST(ColoredToHyper, MonochromaticCliqueIsSunflower) {
  auto g = testing::monochromatic_complete(3, 5);
  auto h = colored_to_hyper(g).hypergraph;
  EXPECT_TRUE(are_isomorphic(h, star_hypergraph(3, 0, 5), CopyMode::part_respecting));
}

TEST(ColoredToHyper, EdgelessIsMatching) {
  ColoredMultigraph g(3);
  for (int i = 0; i < 4; ++i) g.add_vertex("v" + std::to_string(i));
  EXPECT_TRUE(are_isomorphic(colored_to_hyper(g).hypergraph, matching_hypergraph(3, 4), CopyMode::part_respecting));
}

TEST(ColoredToHyper, TwoColoredPath) {
  ColoredMultigraph g(2);
  for (auto n : {"a", "b", "c"}) g.add_vertex(n);
  g.add_edge(0, 1, 0);
  g.add_edge(1, 2, 1);
  auto ch = colored_to_hyper(g);
  const auto& h = ch.hypergraph;
  ASSERT_EQ(h.edge_count(), 3u);
  auto ea = h.edge(ch.edge_of_vertex[0]), eb = h.edge(ch.edge_of_vertex[1]), ec = h.edge(ch.edge_of_vertex[2]);
  EXPECT_EQ(ea[0], eb[0]);
  EXPECT_NE(ea[1], eb[1]);
  EXPECT_EQ(eb[1], ec[1]);
  EXPECT_NE(eb[0], ec[0]);
}

TEST(ColoredMultigraph, CollapsesSameColorParallels) {
  ColoredMultigraph g(2);
  g.add_vertex("a");
  g.add_vertex("b");
  EXPECT_TRUE(g.add_edge(0, 1, 0));
  EXPECT_FALSE(g.add_edge(1, 0, 0));
  EXPECT_TRUE(g.add_edge(0, 1, 1));
  EXPECT_EQ(g.edges().size(), 2u);
  EXPECT_THROW(g.add_edge(0, 0, 0), InvalidInput);
  EXPECT_THROW(g.add_edge(0, 1, 2), InvalidInput);
}

TEST(Duality, RoundTripUpToIsolatedVertices) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 2 + trial % 3;
    auto h = random_hypergraph(rng, r, 1 + trial % 8, 2 + trial % 3);
    auto padded = testing::with_isolated(h, rng, trial % 3);
    auto back = colored_to_hyper(hyper_to_colored(padded)).hypergraph;
    ASSERT_TRUE(are_isomorphic(back, h, CopyMode::part_respecting)) << h.str() << " -> " << back.str();
  }
}

TEST(Duality, CorrespondenceTable) {
  Rng rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 2 + trial % 3;
    auto h = random_hypergraph(rng, r, 1 + trial % 8, 2 + trial % 3);
    auto g = hyper_to_colored(h);
    // Matchings are independent sets.
    ASSERT_EQ(independence_number(g), oracle_matching_number(h));
    // Part-p components biject with the part-p vertices of H.
    for (std::uint32_t p = 0; p < r; ++p) ASSERT_EQ(g.components(p).size(), h.part_size(p));
    // A cover of H gives a component cover of G of the same size.
    auto c = vertex_cover_min(h);
    std::vector<bool> hit(g.vertex_count(), false);
    for (const auto& v : c)
      for (std::size_t e = 0; e < h.edge_count(); ++e)
        if (h.contains(e, v)) hit[e] = true;
    ASSERT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    ASSERT_LE(oracle_min_component_cover(g), c.size());
  }
}

TEST(Duality, ComponentCoverEqualsTau) {
  // Covers of H by tau vertices are covers of G by tau components.
  Rng rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 2 + trial % 2;
    auto g = random_graph(rng, r, 3 + trial % 8, 0.6);
    auto h = colored_to_hyper(g).hypergraph;
    const auto alpha = independence_number(g);
    // A matching of H is a set of vertices in pairwise distinct components
    // of every color, hence independent; the converse needs G = G(H).
    ASSERT_LE(matching_number(h), alpha);
    ASSERT_EQ(independence_number(hyper_to_colored(h)), matching_number(h));
    const auto tau = vertex_cover_min(h).size();
    ASSERT_EQ(oracle_min_component_cover(g), tau) << "component cover and tau disagree";
    if (r <= 3) {
      ASSERT_LE(tau, (r - 1) * alpha);  // Ryser holds for r <= 3
    }
  }
}

TEST(IndependenceNumber, AgreesWithOracle) {
  Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, 2 + trial % 3, 1 + trial % 18, 0.3 + 0.05 * (trial % 10), 0.1);
    auto s = maximum_independent_set(g);
    ASSERT_TRUE(is_independent_set(g, s));
    ASSERT_EQ(s.size(), oracle_independence_number(g));
  }
}

TEST(IndependenceNumber, Examples) {
  EXPECT_EQ(independence_number(testing::monochromatic_complete(2, 7)), 1u);
  ColoredMultigraph e(2);
  for (int i = 0; i < 6; ++i) e.add_vertex("v" + std::to_string(i));
  EXPECT_EQ(independence_number(e), 6u);
  Guards g;
  g.max_vertices = 5;
  EXPECT_THROW(independence_number(e, g), GuardExceeded);
}

}  // namespace
}  // namespace ryser
