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

TEST(BasicSequence, B0AndLengthBound) {
  EXPECT_EQ(basic_b0(2, 1), 2 * 64);  // 2! * 4^3
  EXPECT_TRUE(within_length_bound(1000, 2, 1));
  EXPECT_TRUE(within_length_bound(1UL << 40, 3, 2));
}

TEST(BasicSequence, R2Nu1Certifies) {
  auto res = generate_basic_sequence(2, 1);
  const auto& seq = res.sequence;
  EXPECT_TRUE(res.certification.certified)
      << (res.certification.failure ? res.certification.failure->describe() : "");
  EXPECT_TRUE(res.length_bound_ok);
  EXPECT_EQ(seq.c, 1u);
  ASSERT_FALSE(seq.items.empty());
  EXPECT_TRUE(are_isomorphic(seq.items.back().hypergraph, single_edge(2)));
  EXPECT_EQ(res.levels.size(), seq.items.size());
}

TEST(BasicSequence, ItemsRespectMatchingAndBudget) {
  for (auto [r, nu] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {2, 2}}) {
    GenerationCaps caps;
    caps.b_max = 3;
    auto res = generate_basic_sequence(r, nu, caps);
    for (std::size_t i = 0; i < res.sequence.items.size(); ++i) {
      const auto& it = res.sequence.items[i];
      ASSERT_LE(matching_number(it.hypergraph), nu) << "item " << i;
      auto [a, b] = res.levels[i];
      // (r-1)a for the kernels plus (r-1) per residue matching edge.
      ASSERT_LE(it.witness.size(), (r - 1) * a + (r - 1) * (nu - a)) << "item " << i << " a=" << a << " b=" << b;
      ASSERT_TRUE(it.hypergraph.covered_by(it.witness));
    }
  }
}

TEST(BasicSequence, GeneratedSequenceCovers) {
  auto res = generate_basic_sequence(2, 1);
  ASSERT_TRUE(res.certification.certified);
  testing::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = testing::random_with_nu(rng, 2, 1, 6, 4);
    auto c = cover_from_sequence(h, res.sequence);
    ASSERT_TRUE(h.covered_by(c.cover));
    ASSERT_LE(c.cover.size(), 1u);
  }
}

TEST(BasicSequence, ZeroResidueCapDoesNotCertify) {
  GenerationCaps caps;
  caps.b_max = 0;
  auto res = generate_basic_sequence(2, 1, caps);
  EXPECT_FALSE(res.certification.certified);
  ASSERT_TRUE(res.certification.failure);
}

TEST(BasicSequence, RejectsBadParameters) {
  EXPECT_THROW(generate_basic_sequence(1, 1), InvalidInput);
  EXPECT_THROW(generate_basic_sequence(2, 0), InvalidInput);
  GenerationCaps caps;
  caps.petals = 1;
  EXPECT_THROW(generate_basic_sequence(2, 1, caps), InvalidInput);
}

}  // namespace
}  // namespace ryser
