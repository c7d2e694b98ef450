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


#include <cmath>

#include <gtest/gtest.h>

#include "torsion/distributions.hpp"

namespace torsion {
namespace {

TEST(Zeta, KnownValues) {
  EXPECT_NEAR(zeta(2), M_PI * M_PI / 6, 1e-14);
  EXPECT_NEAR(zeta(4), std::pow(M_PI, 4) / 90, 1e-14);
  EXPECT_NEAR(zeta(40), 1.0, 1e-11);
}

TEST(CohenLenstra, Normalizer) {
  EXPECT_NEAR(cl_normalizer(2), 0.2887880951, 1e-10);
  EXPECT_NEAR(cl_normalizer(10007), 1.0 - 1.0 / 10007, 1e-7);
  for (std::uint64_t q : {2u, 3u, 5u, 7u}) {
    double s = 0;
    for (int size = 0; size <= 20; ++size) {
      for (const auto& l : partitions_of(size)) {
        s += 1.0 / aut_order(PGroup(q, l)).get_d();
      }
    }
    EXPECT_NEAR(s * cl_normalizer(q), 1.0, 1e-6) << q;
  }
}

TEST(CohenLenstra, Probabilities) {
  EXPECT_NEAR(cl_probability(PGroup(2, {})), 0.288788, 1e-6);
  EXPECT_DOUBLE_EQ(cl_probability(PGroup(2, {1})), cl_probability(PGroup(2, {})));
  EXPECT_DOUBLE_EQ(cl_probability(PGroup(2, {1, 1})), cl_normalizer(2) / 6);
  const auto d = cl_distribution(3);
  EXPECT_LT(d.residual, 1e-6);
  EXPECT_NEAR(d.total(), 1.0, 1e-9);
}

TEST(LambdaK, PredictedRatios) {
  auto ratio = [](const char* g, int k) {
    return lambda_k(AbelianGroup(), k) / lambda_k(AbelianGroup::parse(g), k);
  };
  EXPECT_NEAR(ratio("Z/2", 1), 2, 1e-9);
  EXPECT_NEAR(ratio("Z/3", 1), 6, 1e-9);
  EXPECT_NEAR(ratio("Z/4", 1), 8, 1e-9);
  EXPECT_NEAR(ratio("Z/6", 1), 12, 1e-9);
  EXPECT_NEAR(ratio("Z/2 x Z/2", 1), 24, 1e-9);
  EXPECT_NEAR(ratio("Z/2", 2), 4, 1e-9);
  EXPECT_NEAR(ratio("Z/3", 2), 18, 1e-9);
  EXPECT_NEAR(ratio("Z/2 x Z/2", 2), 96, 1e-9);
  EXPECT_NEAR(ratio("Z/5", 2), 100, 1e-9);
  EXPECT_NEAR(ratio("Z/2", 3), 8, 1e-9);
  EXPECT_NEAR(ratio("Z/3", 3), 54, 1e-9);
  EXPECT_THROW(lambda_k_normalizer(0), std::invalid_argument);
}

TEST(LambdaK, NormalizerIsZetaProduct) {
  for (int k = 1; k <= 3; ++k) {
    double prod = 1;
    for (int i = k + 1; i < 80; ++i) prod /= zeta(i);
    EXPECT_NEAR(lambda_k_normalizer(k), prod, 1e-12);
    const auto d = lambda_k_distribution(k, 2000);
    EXPECT_NEAR(d.total(), 1.0, 1e-9);
  }
  // Most of lambda_1's mass sits on small groups.
  EXPECT_LT(lambda_k_distribution(1, 10000).residual, 2e-3);
}

TEST(Phases, SeriesValues) {
  const PhaseSeries s = expected_phases_series();
  EXPECT_NEAR(s.p1, 0.564, 1e-3);
  EXPECT_NEAR(s.inner_sum, 1.7476, 1e-3);
  EXPECT_NEAR(s.value, 2.49524, 1e-3);
  // Independent evaluation: p_k = 1 - lambda_k(trivial).
  double inner = 0, prod = 1;
  for (int i = 1; i < 60; ++i) {
    inner += prod;
    double z = 1;
    for (int j = i + 1; j < 80; ++j) z /= zeta(j);
    prod *= 1 - z;
  }
  EXPECT_NEAR(s.inner_sum, inner, 1e-9);
  EXPECT_NEAR(expected_phases(), 2 * inner - 1, 1e-9);
}

TEST(TotalVariation, Examples) {
  GroupDistribution<PGroup> a;
  a.weights[PGroup(2, {})] = 0.75;
  a.weights[PGroup(2, {1})] = 0.25;
  EXPECT_DOUBLE_EQ(tv_distance(a, a), 0.0);
  GroupDistribution<PGroup> b;
  b.weights[PGroup(2, {2})] = 1.0;
  EXPECT_DOUBLE_EQ(tv_distance(a, b), 1.0);
  auto cl = cl_distribution(2);
  extend_support<PGroup>(cl, {PGroup(2, {}), PGroup(2, {1})}, cl_probability);
  EXPECT_NEAR(tv_distance(a, cl), 0.4612, 1e-4);
}

TEST(Ratios, Table) {
  const PGroup one(2, {}), z2(2, {1});
  auto r = ratio_table<PGroup>({{one, 600}, {z2, 300}}, one);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_DOUBLE_EQ(r[z2], 2.0);
  r = ratio_table<PGroup>({{one, 600}, {z2, 600}, {PGroup(2, {2}), 0}}, one);
  EXPECT_EQ(r.size(), 1u);
  EXPECT_DOUBLE_EQ(r[z2], 1.0);
  EXPECT_THROW(ratio_table<PGroup>({{z2, 3}}, one), UndefinedRatio);
}

TEST(Empirical, Normalizes) {
  const auto e = empirical<PGroup>({{PGroup(3, {}), 3}, {PGroup(3, {1}), 1}});
  EXPECT_DOUBLE_EQ(e.probability(PGroup(3, {})), 0.75);
  EXPECT_THROW(empirical<PGroup>({}), std::invalid_argument);
}

}  // namespace
}  // namespace torsion
