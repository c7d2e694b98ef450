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
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "torsion/simplicial.hpp"
#include "torsion/smith.hpp"

namespace torsion {
namespace {

TEST(Faces, EnumerationCounts) {
  const auto f = enumerate_faces(4, 2);
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[0], Simplex({0, 1, 2}));
  EXPECT_EQ(enumerate_faces(6, 2).size(), 20u);
  EXPECT_EQ(enumerate_faces(5, 1).size(), 10u);
}

TEST(Faces, ColexRanks) {
  EXPECT_EQ(face_rank(Simplex{0, 1, 2}, 10), 0u);
  EXPECT_EQ(face_rank(Simplex{0, 1, 3}, 10), 1u);
  const auto all = enumerate_faces(9, 3);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(face_rank(all[i], 9), i);
  }
}

TEST(Faces, RankRoundTrip) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const int n = 6 + static_cast<int>(rng() % 60);
    const int k = 1 + static_cast<int>(rng() % 5);
    const FaceRank r = rng() % binomial(n, k + 1);
    const Simplex s = face_unrank(r, n, k);
    EXPECT_EQ(s.dimension(), k);
    EXPECT_EQ(face_rank(s, n), r);
  }
}

TEST(Faces, RejectsBadSimplices) {
  EXPECT_THROW(Simplex({2, 1}), std::invalid_argument);
  EXPECT_THROW(face_rank(Simplex{0, 1, 7}, 5), std::invalid_argument);
}

TEST(Boundary, SingleTriangleSigns) {
  const ComplexState s = fixtures::from(3, 2, {{0, 1, 2}});
  const SparseIntMatrix b = boundary_matrix(s, 2);
  ASSERT_EQ(b.rows(), 3u);
  ASSERT_EQ(b.cols(), 1u);
  EXPECT_EQ(b.at(face_rank(Simplex{1, 2}, 3), 0), 1);
  EXPECT_EQ(b.at(face_rank(Simplex{0, 2}, 3), 0), -1);
  EXPECT_EQ(b.at(face_rank(Simplex{0, 1}, 3), 0), 1);
}

TEST(Boundary, FullComplexShape) {
  std::vector<FaceRank> all(binomial(50, 3));
  for (FaceRank r = 0; r < all.size(); ++r) all[r] = r;
  const SparseIntMatrix b = boundary_matrix(ComplexState(50, 2, all), 2);
  EXPECT_EQ(b.rows(), 1225u);
  EXPECT_EQ(b.cols(), 19600u);
  EXPECT_EQ(b.nonzeros(), 3u * 19600u);
}

// Product of two sparse integer matrices, dense result.
std::vector<std::vector<long>> multiply(const SparseIntMatrix& a,
                                        const SparseIntMatrix& b) {
  std::vector<std::vector<long>> out(a.rows(), std::vector<long>(b.cols(), 0));
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (const auto& [k, v] : b.column(j)) {
      for (const auto& [i, u] : a.column(k)) {
        out[i][j] += u.get_si() * v.get_si();
      }
    }
  }
  return out;
}

TEST(Boundary, SquareIsZero) {
  std::mt19937_64 rng(5);
  for (int d = 2; d <= 4; ++d) {
    for (int t = 0; t < 5; ++t) {
      const ComplexState s = fixtures::random_complex(d + 4, d, 0.5, rng);
      for (int k = 2; k <= d; ++k) {
        const auto prod = multiply(boundary_matrix(s, k - 1), boundary_matrix(s, k));
        for (const auto& row : prod) {
          for (long v : row) ASSERT_EQ(v, 0);
        }
      }
    }
  }
}

TEST(Degrees, Examples) {
  const auto sphere = fixtures::from(4, 2, fixtures::tetrahedron_boundary());
  for (int deg : face_degrees(sphere, 1)) EXPECT_EQ(deg, 2);
  for (int deg : face_degrees(ComplexState(7, 2), 1)) EXPECT_EQ(deg, 0);

  std::vector<Simplex> cone;
  for (int i = 1; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) cone.push_back({0, i, j});
  }
  const auto deg = face_degrees(fixtures::from(6, 2, cone), 1);
  for (const auto& e : enumerate_faces(6, 1)) {
    EXPECT_EQ(deg[face_rank(e, 6)], e.contains(0) ? 4 : 1) << e.to_string();
  }
}

TEST(FaceIo, RoundTripIsOneIndexed) {
  const auto faces = fixtures::projective_plane();
  std::stringstream ss;
  write_faces(ss, faces);
  EXPECT_EQ(ss.str().substr(0, 6), "1,2,4\n");
  EXPECT_EQ(read_faces(ss), faces);
}

TEST(SparseMatrix, TextRoundTripAndTranspose) {
  SparseIntMatrix m(3, 2);
  m.add(0, 0, 5);
  m.add(2, 1, BigInt("123456789012345678901234567890"));
  m.add(2, 1, -1);
  EXPECT_EQ(SparseIntMatrix::from_text(m.to_text()), m);
  EXPECT_EQ(m.transposed().transposed(), m);
  m.add(0, 0, -5);
  EXPECT_EQ(m.nonzeros(), 1u);
}

}  // namespace
}  // namespace torsion
