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


#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "torsion/homology.hpp"
#include "torsion/lmprocess.hpp"
#include "torsion/qtrees.hpp"
#include "torsion/seeding.hpp"
#include "torsion/shadow.hpp"

namespace torsion {
namespace {

ComplexState with_face(const ComplexState& s, FaceRank f) {
  std::vector<FaceRank> faces = s.faces();
  faces.push_back(f);
  return ComplexState(s.n(), s.d(), faces);
}

// Free-face deletion by repeated full passes over the face list.
std::vector<FaceRank> naive_core(const ComplexState& s) {
  std::vector<FaceRank> faces = s.faces();
  const int d = s.d();
  std::vector<FaceRank> facets(d + 1);
  while (true) {
    std::map<FaceRank, int> deg;
    for (auto f : faces) {
      facet_ranks(f, d, facets);
      for (auto r : facets) ++deg[r];
    }
    std::vector<FaceRank> keep;
    for (auto f : faces) {
      facet_ranks(f, d, facets);
      bool free = false;
      for (auto r : facets) free = free || deg[r] == 1;
      if (!free) keep.push_back(f);
    }
    if (keep.size() == faces.size()) return faces;
    faces = std::move(keep);
  }
}

TEST(Shadow, Examples) {
  auto tri = fixtures::tetrahedron_boundary();
  const Simplex missing = tri.back();
  tri.pop_back();
  const auto y = fixtures::from(4, 2, tri);
  EXPECT_EQ(shadow(y, 10007), (std::vector<FaceRank>{face_rank(missing, 4)}));
  EXPECT_TRUE(shadow(ComplexState(9, 2), 10007).empty());
  std::vector<FaceRank> all(binomial(7, 3));
  for (FaceRank r = 0; r < all.size(); ++r) all[r] = r;
  EXPECT_EQ(shadow_size(ComplexState(7, 2, all), 10007), 0u);
}

TEST(Shadow, MatchesDefinition) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const int d = t % 3 == 2 ? 3 : 2;
    const int n = d == 2 ? 7 + t % 3 : 7;
    const std::uint32_t q = (t % 2) ? 10007 : 3;
    const ComplexState y = fixtures::random_complex(n, d, 0.1 + 0.03 * t, rng);
    const std::uint64_t base = betti_mod_q(y, d, q);
    const auto sh = shadow(y, q);
    const std::set<FaceRank> in(sh.begin(), sh.end());
    for (FaceRank f = 0; f < binomial(n, d + 1); ++f) {
      if (y.contains(f)) {
        EXPECT_FALSE(in.count(f));
        continue;
      }
      const bool raises = betti_mod_q(with_face(y, f), d, q) == base + 1;
      ASSERT_EQ(in.count(f) == 1, raises) << "trial " << t << " face " << f;
    }
  }
}

TEST(Shadow, TwoLargePrimesAgree) {
  const ProcessTrace trace = sample_trace(20, 2, 300, 8);
  for (std::uint64_t m : {100u, 200u, 300u}) {
    EXPECT_EQ(shadow(trace.at(m), 10007), shadow(trace.at(m), 1000003));
  }
}

TEST(CocycleBasis, TracksLowerBetti) {
  const int n = 9, d = 2;
  const std::uint32_t q = 10007;
  const ProcessTrace trace = sample_trace(n, d, binomial(n, 3), 77);
  CocycleBasis basis(n, d, q);
  EXPECT_EQ(basis.dimension(), binomial(n - 1, d));
  for (std::uint64_t m = 1; m <= trace.length(); ++m) {
    const ComplexState before = trace.at(m - 1);
    const bool expect_cycle = basis.in_span(trace.order[m - 1]);
    const bool cycle = basis.add(trace.order[m - 1]);
    EXPECT_EQ(cycle, expect_cycle);
    if (m % 7 == 0 || m == trace.length()) {
      ASSERT_EQ(basis.dimension(), betti_mod_q(trace.at(m), d - 1, q)) << m;
    }
    EXPECT_EQ(cycle, betti_mod_q(trace.at(m), d, q) > betti_mod_q(before, d, q));
    if (m > 40) break;
  }
  EXPECT_THROW(CocycleBasis(9, 2, 1u << 27), std::invalid_argument);
}

TEST(Core, Examples) {
  EXPECT_TRUE(core(initial_tree(7).state()).empty());
  const auto sphere = fixtures::from(4, 2, fixtures::tetrahedron_boundary());
  EXPECT_EQ(core(sphere).faces, sphere.faces());
  const auto rp2 = fixtures::from(6, 2, fixtures::projective_plane());
  const CoreComplex c = core(rp2);
  EXPECT_EQ(c.faces, rp2.faces());
  EXPECT_TRUE(c.spanning());
  EXPECT_EQ(c.ridges.size(), 15u);
  const HomologySummary h = core_homology(c);
  EXPECT_EQ(h.betti, 0u);
  EXPECT_EQ(h.torsion.literal(), "Z/2");
  EXPECT_THROW(core_homology(CoreComplex{}), std::invalid_argument);
}

TEST(Core, OrderIndependentAndMatchesNaive) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 40; ++t) {
    const int d = t % 4 == 3 ? 3 : 2;
    const int n = d == 2 ? 9 : 8;
    const ComplexState y = fixtures::random_complex(n, d, 0.15 + 0.01 * t, rng);
    const CoreComplex c = core(y);
    EXPECT_EQ(c.faces, naive_core(y)) << t;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      EXPECT_EQ(core(y, seed).faces, c.faces);
    }
    // No free ridges remain.
    std::map<FaceRank, int> deg;
    std::vector<FaceRank> facets(d + 1);
    for (auto f : c.faces) {
      facet_ranks(f, d, facets);
      for (auto r : facets) ++deg[r];
    }
    for (const auto& [r, k] : deg) EXPECT_GE(k, 2);
    EXPECT_EQ(deg.size(), c.ridges.size());
  }
}

TEST(Core, Components) {
  // Two spheres sharing only a vertex.
  const std::vector<Simplex> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                   {3, 4, 5}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}};
  const CoreComplex c = core(fixtures::from(7, 2, faces));
  ASSERT_EQ(c.faces.size(), 8u);
  const auto parts = core_components(c);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].faces.size(), 4u);
  EXPECT_FALSE(parts[0].spanning());
  EXPECT_EQ(core_homology(c).betti, 0u);
}

TEST(Giant, Check) {
  const auto rp2 = fixtures::from(6, 2, fixtures::projective_plane());
  EXPECT_TRUE(giant_check(rp2, AbelianGroup::parse("Z/2")));
  EXPECT_FALSE(giant_check(rp2, AbelianGroup::parse("Z/3")));
  EXPECT_THROW(giant_check(rp2, AbelianGroup()), std::invalid_argument);
  EXPECT_FALSE(giant_check(initial_tree(6).state(), AbelianGroup::parse("Z/2")));
  // A sphere on four of seven vertices: core does not span.
  EXPECT_FALSE(giant_check(
      fixtures::from(7, 2, fixtures::tetrahedron_boundary()),
      AbelianGroup::parse("Z/2")));
}

TEST(Hitting, ReportIsConsistent) {
  int checked = 0;
  for (std::uint64_t i = 0; i < 30 && checked < 2; ++i) {
    const int n = 25;
    SearchOptions opt;
    opt.window_radius = 50;
    const ProcessTrace trace =
        sample_trace(n, 2, m_star(n, 2) + 2 * opt.window_radius, derive_seed(4, i));
    const LTResult lt = lt_search(trace, opt);
    if (lt.trivial) continue;
    ++checked;
    HittingOptions h;
    h.radius = 10;
    const HittingReport r = hitting_time_experiment(trace, lt, h);
    EXPECT_DOUBLE_EQ(r.threshold, default_shadow_threshold(n, 2));
    EXPECT_DOUBLE_EQ(r.threshold, 625.0);
    ASSERT_TRUE(r.m_burst.has_value());
    EXPECT_LE(*r.m_burst, lt.m0);
    EXPECT_EQ(torsion_at(trace, *r.m_burst), lt.group);
    if (r.m_shadow) {
      EXPECT_GT(shadow_size(trace.at(*r.m_shadow), 10007), r.threshold);
      if (*r.m_shadow > r.scan_lo) {
        EXPECT_LE(shadow_size(trace.at(*r.m_shadow - 1), 10007), r.threshold);
      }
    }
    if (r.m_giant) {
      EXPECT_TRUE(giant_check(trace.at(*r.m_giant), lt.group));
    }
    if (r.shadow_at) {
      EXPECT_EQ(*r.shadow_at, shadow_size(trace.at(*r.m_burst), 10007));
    }
    EXPECT_EQ(r.coincide, r.m_burst && r.m_giant && r.m_shadow &&
                              *r.m_burst == *r.m_giant &&
                              *r.m_giant == *r.m_shadow);
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace torsion
