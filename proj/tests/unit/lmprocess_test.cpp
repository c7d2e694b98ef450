// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "torsion/homology.hpp"
#include "torsion/lmprocess.hpp"
#include "torsion/seeding.hpp"

namespace torsion {
namespace {

AbelianGroup G(const char* s) { return AbelianGroup::parse(s); }

TEST(Trace, Reproducible) {
  const ProcessTrace a = sample_trace(60, 2, 1670, 42);
  const ProcessTrace b = sample_trace(60, 2, 1670, 42);
  const ProcessTrace c = sample_trace(60, 2, 1670, 43);
  EXPECT_EQ(a.length(), 1670u);
  EXPECT_EQ(a.order, b.order);
  EXPECT_NE(a.order, c.order);
  EXPECT_EQ(a.at(10).face_count(), 10u);
  EXPECT_THROW(a.at(1671), std::out_of_range);
}

TEST(Trace, FullLengthIsPermutation) {
  const ProcessTrace t = sample_trace(9, 2, 84, 7);
  std::vector<FaceRank> sorted = t.order;
  std::sort(sorted.begin(), sorted.end());
  for (FaceRank r = 0; r < 84; ++r) EXPECT_EQ(sorted[r], r);
  EXPECT_THROW(sample_trace(9, 2, 85, 7), std::invalid_argument);
}

TEST(JumpPoints, Synthetic) {
  const std::vector<std::uint64_t> beta{0, 0, 1, 1, 2};
  auto f = [&](std::uint64_t m) { return beta.at(m); };
  // m = 1 and m = 3 satisfy the condition; the endpoints are excluded.
  EXPECT_EQ(find_jump_points(f, 0, 4), (std::vector<std::uint64_t>{1, 3}));
  EXPECT_TRUE(find_jump_points([](std::uint64_t) { return 5u; }, 0, 100).empty());
}

TEST(JumpPoints, RandomStaircases) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint64_t> beta(2 + rng() % 300);
    std::uint64_t v = rng() % 3;
    for (auto& b : beta) {
      if (rng() % 5 == 0) v += 1 + rng() % 2;
      b = v;
    }
    auto f = [&](std::uint64_t m) { return beta.at(m - 17); };
    ASSERT_EQ(find_jump_points(f, 17, 17 + beta.size() - 1),
              oracle::exhaustive_jumps(beta, 17));
  }
}

TEST(JumpPoints, MatchesExhaustiveScanOnTraces) {
  const std::uint32_t q0 = 10007;
  for (int t = 0; t < 50; ++t) {
    const int n = 8 + t % 13;  // 8..20
    const std::uint64_t total = binomial(n, 3);
    const std::uint64_t len = std::min<std::uint64_t>(total, 3 * n * n / 2);
    const ProcessTrace trace = sample_trace(n, 2, len, derive_seed(5, t));
    const std::uint64_t m1 = len / 4, m2 = len;
    std::vector<std::uint64_t> beta;
    for (std::uint64_t m = m1; m <= m2; ++m) {
      beta.push_back(betti_mod_q(trace.at(m), 2, q0));
    }
    ASSERT_EQ(find_jump_points(trace, m1, m2, q0),
              oracle::exhaustive_jumps(beta, m1))
        << "trace " << t;
  }
}

TEST(Burst, TableExampleShape) {
  const AbelianGroup peak = G("Z/2 x Z/79040679454167077902597570");
  const std::vector<AbelianGroup> seq{
      G("1"),   G("Z/2"), G("Z/2"), G("Z/2"), G("Z/2"), G("Z/2 x Z/2"),
      peak,     G("Z/2"), G("Z/2"), G("1")};
  const BurstRecord b = burst_analysis(seq, peak, 6);
  EXPECT_EQ(b.subcritical,
            (std::vector<AbelianGroup>{G("Z/2 x Z/2"), G("Z/2")}));
  EXPECT_EQ(b.supercritical, (std::vector<AbelianGroup>{G("Z/2")}));
  EXPECT_EQ(b.phases, 4);
  EXPECT_EQ(b.duration, 8u);
  EXPECT_EQ(b.block_start, 1u);
  EXPECT_EQ(b.block_end, 8u);
  EXPECT_TRUE(b.unimodal);
}

TEST(Burst, SingleStep) {
  const std::vector<AbelianGroup> seq{G("1"), G("Z/3"), G("1")};
  const BurstRecord b = burst_analysis(seq, G("Z/3"), 1);
  EXPECT_TRUE(b.subcritical.empty());
  EXPECT_TRUE(b.supercritical.empty());
  EXPECT_EQ(b.phases, 1);
  EXPECT_EQ(b.duration, 1u);
  EXPECT_THROW(burst_analysis(seq, G("Z/3"), 0), std::invalid_argument);
  EXPECT_THROW(burst_analysis(seq, G("Z/2"), 1), std::invalid_argument);
}

TEST(Burst, NonUnimodalAndRepeats) {
  // A group that returns later in the scan is counted once.
  const std::vector<AbelianGroup> seq{G("1"), G("Z/2"), G("Z/4"), G("Z/2"),
                                      G("Z/12"), G("Z/3"), G("1"), G("Z/5")};
  const BurstRecord b = burst_analysis(seq, G("Z/12"), 4);
  EXPECT_EQ(b.subcritical, (std::vector<AbelianGroup>{G("Z/2"), G("Z/4")}));
  EXPECT_EQ(b.supercritical, (std::vector<AbelianGroup>{G("Z/3")}));
  EXPECT_FALSE(b.unimodal);
  EXPECT_EQ(b.other_episodes, 1u);
}

TEST(Search, NoTorsionGivesTrivial) {
  // At n = 8 torsion is essentially absent; the window covers everything.
  SearchOptions opt;
  opt.window_radius = 20;
  const ProcessTrace t = sample_trace(8, 2, 56, 3);
  const LTResult r = lt_search(t, opt);
  for (const auto& g : r.jump_torsion) {
    if (!g.trivial()) GTEST_SKIP() << "torsion present in this instance";
  }
  EXPECT_TRUE(r.trivial);
  EXPECT_TRUE(r.group.trivial());
}

TEST(Search, ResultIsConsistent) {
  int found = 0;
  for (std::uint64_t i = 0; i < 40 && found < 3; ++i) {
    const int n = 30;
    SearchOptions opt;
    opt.window_radius = 60;
    const ProcessTrace trace =
        sample_trace(n, 2, m_star(n, 2) + 2 * opt.window_radius, derive_seed(9, i));
    const LTResult r = lt_search(trace, opt);
    EXPECT_EQ(r.jump_points.size(), r.jump_torsion.size());
    if (r.trivial) continue;
    ++found;
    EXPECT_EQ(torsion_at(trace, r.m0), r.group);
    EXPECT_EQ(torsion_at(trace, r.m_peak), r.group);
    EXPECT_LE(r.m0, r.m_peak);
    for (const auto& g : r.jump_torsion) EXPECT_LE(g.order(), r.group.order());
    EXPECT_EQ(integer_homology(trace.at(r.m0), 1).torsion, r.group);
    const BurstRecord b = analyze_burst(trace, r);
    EXPECT_LE(b.block_start, r.m0);
    EXPECT_GE(b.block_end, r.m0);
    EXPECT_TRUE(torsion_at(trace, b.block_start - 1).trivial());
    EXPECT_TRUE(torsion_at(trace, b.block_end + 1).trivial());
    const auto seq = torsion_sequence(trace, b.block_start, b.block_end);
    for (const auto& g : seq) EXPECT_FALSE(g.trivial());
  }
  EXPECT_GT(found, 0);
}

TEST(Search, FarBelowWindowIsTrivial) {
  const ProcessTrace trace = sample_trace(40, 2, 600, 1);
  for (const auto& g : torsion_sequence(trace, 0, 300)) EXPECT_TRUE(g.trivial());
}

TEST(Search, RejectsShortTrace) {
  const ProcessTrace t = sample_trace(30, 2, 200, 1);
  EXPECT_THROW(lt_search(t), std::invalid_argument);
}

}  // namespace
}  // namespace torsion
