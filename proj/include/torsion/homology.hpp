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

// Homology of d-complexes with complete (d-1)-skeleton: elementary collapses,
// Betti numbers over prime fields and integral homology in the top two
// degrees.

#ifndef TORSION_HOMOLOGY_HPP_
#define TORSION_HOMOLOGY_HPP_

#include <cstdint>
#include <vector>

#include "torsion/groups.hpp"
#include "torsion/simplicial.hpp"
#include "torsion/smith.hpp"

namespace torsion {

struct HomologySummary {
  std::uint64_t betti = 0;
  AbelianGroup torsion;

  friend bool operator==(const HomologySummary&,
                         const HomologySummary&) = default;
};

// Result of exhaustively collapsing free (d-1)-faces.
struct CollapseResult {
  std::vector<FaceRank> ridges;  // (d-1)-faces not removed, sorted
  std::vector<FaceRank> faces;   // d-faces not removed, sorted
  std::size_t pairs = 0;         // number of (ridge, face) pairs removed
};

CollapseResult collapse_reduce(const ComplexState& state);

// Boundary matrix of the collapsed complex restricted to ridges that still
// meet a face (zero rows dropped). Columns follow result.faces.
SparseIntMatrix reduced_boundary(const ComplexState& state,
                                 const CollapseResult& result);

// rank of the top boundary map over F_q, via collapse then sparse
// elimination. q must be a prime below 2^32.
std::size_t top_rank_mod_q(const ComplexState& state, std::uint32_t q);

// dim H_i(state; F_q) for 0 <= i <= d.
std::uint64_t betti_mod_q(const ComplexState& state, int i, std::uint32_t q);

// Integral H_i for i in {d-1, d}.
HomologySummary integer_homology(const ComplexState& state, int i);

// Both top degrees from one Smith form.
struct TopHomology {
  HomologySummary lower;  // H_{d-1}
  HomologySummary top;    // H_d
};
TopHomology top_homology(const ComplexState& state);

}  // namespace torsion

#endif  // TORSION_HOMOLOGY_HPP_
