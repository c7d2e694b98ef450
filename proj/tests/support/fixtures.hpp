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


#ifndef TORSION_TESTS_SUPPORT_FIXTURES_HPP_
#define TORSION_TESTS_SUPPORT_FIXTURES_HPP_

#include <random>
#include <vector>

#include "torsion/simplicial.hpp"

namespace torsion::fixtures {

// The 6-vertex triangulation of the real projective plane.
inline std::vector<Simplex> projective_plane() {
  return {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
          {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
}

inline std::vector<Simplex> tetrahedron_boundary() {
  return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
}

inline ComplexState from(int n, int d, const std::vector<Simplex>& s) {
  return ComplexState::from_simplices(n, d, s);
}

// Each d-face kept independently with probability p.
inline ComplexState random_complex(int n, int d, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<FaceRank> faces;
  const std::uint64_t total = binomial(n, d + 1);
  for (FaceRank r = 0; r < total; ++r) {
    if (keep(rng)) faces.push_back(r);
  }
  return ComplexState(n, d, faces);
}

inline std::vector<std::vector<int>> vertex_lists(const ComplexState& s) {
  std::vector<std::vector<int>> out;
  for (const auto& f : s.simplices()) {
    out.emplace_back(f.vertices().begin(), f.vertices().end());
  }
  return out;
}

}  // namespace torsion::fixtures

#endif  // TORSION_TESTS_SUPPORT_FIXTURES_HPP_
