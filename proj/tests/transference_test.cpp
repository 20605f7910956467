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

const Integer k24 = pow(2UL, 24);

std::vector<Rational> rats(std::initializer_list<Integer> xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

TEST(FindTPrime, Examples) {
  auto a = find_t_prime(rats({2, 5}), Rational(1), k24, 2);
  EXPECT_EQ(a.s, 2u);
  EXPECT_EQ(a.t_prime, 2u);
  EXPECT_EQ(a.m_prime, 6);
  auto b = find_t_prime(rats({20, pow(2UL, 20)}), Rational(1), k24, 2);
  EXPECT_EQ(b.s, 0u);
  EXPECT_EQ(b.t_prime, 0u);
  EXPECT_EQ(b.m_prime, 2);
  auto c = find_t_prime(rats({k24, k24}), Rational(1), k24, 2);
  EXPECT_EQ(c.s, 0u);
  EXPECT_EQ(c.t_prime, 0u);
  EXPECT_EQ(c.m_prime, 2);
}

TEST(FindTPrime, ExactThresholdsAreNotExceeded) {
  // m_1 = 16 = k^{1/6} exactly, so s = 1; 17 is not above 16 * 16.
  auto t = find_t_prime(rats({16, 17}), Rational(1), k24, 2);
  EXPECT_EQ(t.s, 1u);
  EXPECT_EQ(t.t_prime, 2u);
  EXPECT_EQ(t.m_prime, 18);
}

TEST(FindTPrime, RandomInputsSatisfyAllThree) {
  testing::Rng rng(71);
  for (unsigned long r : {2UL, 3UL}) {
    const Integer k = pow(2UL, 12 * r + 6);
    std::uniform_int_distribution<unsigned long> bits(0, 12 * r + 6);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Rational> ms;
      for (unsigned long i = 0; i < r; ++i) ms.emplace_back(pow(2UL, bits(rng)) + static_cast<unsigned long>(trial % 5));
      std::sort(ms.begin(), ms.end());
      auto t = find_t_prime(ms, Rational(1), k, r);  // asserts internally
      ASSERT_LE(t.s, t.t_prime);
      ASSERT_LE(t.t_prime, r);
      ASSERT_NO_THROW(check_step_chain(Rational(1), t.m_prime, k, r));
    }
  }
}

TEST(FindTPrime, Preconditions) {
  EXPECT_THROW(find_t_prime(rats({1}), Rational(1), k24, 2), PreconditionError);
  EXPECT_THROW(find_t_prime(rats({5, 2}), Rational(1), k24, 2), PreconditionError);
  EXPECT_THROW(find_t_prime(rats({1, 2}), Rational(1), pow(2UL, 18), 2), PreconditionError);
}

TEST(StepChain, MarginNeedsLargeK) {
  EXPECT_EQ(check_step_chain(Rational(1), Rational(2), pow(2UL, 24), 2).size(), 7u);
  EXPECT_THROW(check_step_chain(Rational(1), Rational(2), pow(2UL, 19), 2), InternalError);
  EXPECT_THROW(check_step_chain(Rational(2), Rational(1), pow(2UL, 24), 2), InternalError);
}

TEST(Schedule, PaperAndAdaptiveValidate) {
  for (auto mode : {ScheduleMode::paper, ScheduleMode::adaptive})
    for (std::size_t r : {2, 3}) {
      auto s = make_schedule(r, 3, mode);
      EXPECT_FALSE(validate_schedule(s)) << to_string(mode) << " r=" << r;
      EXPECT_EQ(s.k.size(), 5u);
      EXPECT_EQ(s.m.size(), 4u);
      EXPECT_EQ(s.m.back(), s.k.back());
    }
  auto p = make_schedule(2, 1, ScheduleMode::paper);
  EXPECT_EQ(p.k[0], pow(Integer(9), 8));
}

TEST(Schedule, DefectsAreReported) {
  auto s = make_schedule(2, 2, ScheduleMode::adaptive);
  s.k[1] += 1;  // m_0 no longer matches the product
  EXPECT_TRUE(validate_schedule(s));
  EXPECT_THROW(make_custom_schedule(2, {Integer(5), Integer(6), Integer(7)}), InvalidInput);
  EXPECT_THROW(make_schedule(3, 6, ScheduleMode::paper), GuardExceeded);
}

// Two points; metric 0 puts them `far` apart, metric 1 puts them `near`.
MetricFamily two_points(const Integer& far, const Integer& near) {
  return testing::line_metrics({{Integer(0), far}, {Integer(0), near}});
}

TEST(TransferenceStep, SingleEdgeAlreadyCovers) {
  auto seq = sequence_r2_nu1();
  auto sched = make_schedule(2, 2, ScheduleMode::adaptive);
  auto st = initial_state(seq, sched.m_item(1), sched.k_item(1));
  auto step = transference_step(st, seq, two_points(Integer(1), Integer(1)));
  EXPECT_EQ(step.kind, TransferenceStep::Kind::ball_cover);
  ASSERT_EQ(step.balls.size(), 1u);
  EXPECT_EQ(step.balls[0].members.size(), 2u);
}

TEST(TransferenceStep, GrowsIntoEarlierItem) {
  auto seq = sequence_r2_nu1();
  auto sched = make_schedule(2, 2, ScheduleMode::adaptive);
  auto st = initial_state(seq, sched.m_item(1), sched.k_item(1));
  // Metric 0 (the witness part) separates the points beyond k m.
  Integer far = 2 * sched.k_item(1) * sched.m_item(1);
  auto mf = two_points(far, Integer(1));
  auto step = transference_step(st, seq, mf);
  ASSERT_EQ(step.kind, TransferenceStep::Kind::dual_growth);
  EXPECT_EQ(step.uncovered, 1u);
  EXPECT_EQ(step.tp.t_prime, 1u);
  EXPECT_EQ(step.tp.m_prime, st.m + 1);
  ASSERT_TRUE(step.pattern_item);
  EXPECT_EQ(*step.pattern_item, 0u);
  EXPECT_FALSE(is_ab_duality(step.grown, mf, step.grown_phi, Threshold(step.tp.m_prime), step.b_prime));
  EXPECT_EQ(step.next.item, 0u);

  auto res = ball_cover(mf, seq, sched);
  EXPECT_EQ(res.steps_taken, 2u);
  ASSERT_EQ(res.balls.size(), 1u);
  EXPECT_EQ(res.balls[0].metric, 1u);
  EXPECT_EQ(res.history.size(), 2u);
}

TEST(TransferenceStep, SparsePairReachesTheMatching) {
  auto seq = sequence_r2_nu1();
  auto sched = make_schedule(2, 2, ScheduleMode::adaptive);
  Integer far = 2 * sched.k_item(1) * sched.m_item(1);
  auto mf = two_points(far, far);
  auto st = initial_state(seq, sched.m_item(1), sched.k_item(1));
  auto step = transference_step(st, seq, mf);
  EXPECT_EQ(step.kind, TransferenceStep::Kind::premise_violation);
  EXPECT_EQ(step.independent, (std::vector<std::uint32_t>{0, 1}));
  // With and without the up-front premise check the violation surfaces.
  EXPECT_THROW(ball_cover(mf, seq, sched, false), PremiseViolation);
  try {
    ball_cover(mf, seq, sched, true);
    FAIL();
  } catch (const PremiseViolation& e) {
    EXPECT_EQ(e.points.size(), 2u);
  }
}

TEST(BallCover, EdgelessGraphViolatesPremise) {
  ColoredMultigraph g(2);
  g.add_vertex("a");
  g.add_vertex("b");
  auto seq = sequence_r2_nu1();
  EXPECT_THROW(ball_cover(graph_metric_family(g), seq, make_schedule(2, 2, ScheduleMode::paper)), PremiseViolation);
}

TEST(BallCover, GraphMetricsNeverNeedMoreThanCBalls) {
  testing::Rng rng(72);
  auto seq = sequence_r3_nu1();
  const auto& sched = cached_schedule(3, seq.items.size(), ScheduleMode::adaptive);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = testing::random_complete(rng, 3, 4 + trial % 6);
    auto mf = graph_metric_family(g);
    auto res = ball_cover(mf, seq, sched);
    ASSERT_LE(res.balls.size(), seq.c);
    std::vector<bool> hit(mf.size(), false);
    for (const auto& b : res.balls)
      for (auto x : b.members) hit[x] = true;
    ASSERT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool x) { return x; }));
  }
}

TEST(BallCover, ScheduleMustMatchSequence) {
  auto seq = sequence_r2_nu1();
  EXPECT_THROW(ball_cover(two_points(Integer(1), Integer(1)), seq, make_schedule(2, 3, ScheduleMode::adaptive)),
               PreconditionError);
}

}  // namespace
}  // namespace ryser
