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

#include "oracles.hpp"
#include "torsion/groups.hpp"

namespace torsion {
namespace {

TEST(Groups, CanonicalForm) {
  const AbelianGroup g({BigInt(6), BigInt(4), BigInt(1)});
  EXPECT_EQ(g.literal(), "Z/2 x Z/12");
  EXPECT_EQ(g.order(), 24);
  EXPECT_EQ(AbelianGroup::parse("Z/2 x Z/12"), g);
  EXPECT_EQ(AbelianGroup().literal(), "1");
  EXPECT_EQ(AbelianGroup().order(), 1);
  EXPECT_EQ(AbelianGroup().log_order(), 0.0);
  EXPECT_EQ(AbelianGroup({BigInt(2), BigInt(4)}).order(), 8);
  EXPECT_THROW(AbelianGroup::parse("Z/4 x Z/2"), std::invalid_argument);
}

TEST(Groups, LogOrder) {
  EXPECT_NEAR(AbelianGroup::cyclic(BigInt("66911823408")).log_order(),
              std::log(66911823408.0), 1e-9);
  EXPECT_NEAR(AbelianGroup::cyclic(BigInt("66911823408")).log_order(), 24.926,
              1e-3);
}

TEST(Groups, Sylow) {
  const AbelianGroup g({BigInt(2), BigInt(6)});
  EXPECT_EQ(sylow(g, 2), PGroup(2, {1, 1}));
  EXPECT_EQ(sylow(g, 3), PGroup(3, {1}));
  EXPECT_TRUE(sylow(g, 5).trivial());
  const AbelianGroup peak(
      {BigInt(2), BigInt("79040679454167077902597570")});
  EXPECT_EQ(sylow(peak, 2), PGroup(2, {1, 1}));
}

TEST(Groups, PrimaryPartsRebuildGroup) {
  const AbelianGroup g({BigInt(12), BigInt(360), BigInt(7)});
  std::vector<BigInt> orders;
  BigInt prod = 1;
  for (const auto& p : primary_parts(g)) {
    const AbelianGroup part = p.to_abelian();
    for (const auto& f : part.invariant_factors()) orders.push_back(f);
    prod *= p.order();
  }
  EXPECT_EQ(AbelianGroup(orders), g);
  EXPECT_EQ(prod, g.order());
}

TEST(Groups, Factorize) {
  const auto f = factorize(BigInt("79040679454167077902597570"));
  BigInt prod = 1;
  for (const auto& [p, e] : f) {
    EXPECT_TRUE(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0);
    for (unsigned i = 0; i < e; ++i) prod *= p;
  }
  EXPECT_EQ(prod, BigInt("79040679454167077902597570"));
}

TEST(Groups, AutomorphismExamples) {
  EXPECT_EQ(aut_order(PGroup(2, {1, 1})), 6);
  EXPECT_EQ(aut_order(PGroup(2, {3})), 4);
  EXPECT_EQ(aut_order(PGroup(2, {2, 1})), 8);
  EXPECT_EQ(aut_order(PGroup(2, {3, 1})), 16);
  EXPECT_EQ(aut_order(PGroup(3, {1, 1})), 48);
  EXPECT_EQ(aut_order(PGroup(2, {})), 1);
  // Aut(Z/6) = Aut(Z/2) x Aut(Z/3).
  EXPECT_EQ(aut_order(AbelianGroup::cyclic(6)), 2);
}

TEST(Groups, AutomorphismsAgainstBruteForce) {
  for (std::uint64_t q : {2u, 3u, 5u}) {
    for (int s = 1; s <= 4; ++s) {
      if (std::pow(q, s) > 64) break;
      for (const auto& lambda : partitions_of(s)) {
        EXPECT_EQ(aut_order(PGroup(q, lambda)), oracle::brute_aut_order(q, lambda))
            << "q=" << q << " size " << s;
      }
    }
  }
}

TEST(Groups, Partitions) {
  EXPECT_EQ(partitions_of(0).size(), 1u);
  EXPECT_EQ(partitions_of(5).size(), 7u);
  EXPECT_EQ(partitions_of(10).size(), 42u);
  EXPECT_EQ(partitions_of(3).front(), (std::vector<int>{3}));
}

}  // namespace
}  // namespace torsion
