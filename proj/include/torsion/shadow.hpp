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

// Shadows of d-complexes over prime fields, cores, and the hitting-time
// comparison between the torsion burst, the homological giant and the
// giant shadow.

#ifndef TORSION_SHADOW_HPP_
#define TORSION_SHADOW_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "torsion/groups.hpp"
#include "torsion/homology.hpp"
#include "torsion/lmprocess.hpp"
#include "torsion/simplicial.hpp"

namespace torsion {

// Representatives of H^{d-1}(Y; F_q) for a growing complex Y, normalized to
// vanish on (d-1)-faces through vertex 0. A d-face raises beta_d exactly
// when every representative vanishes on its boundary. Requires q < 2^26.
class CocycleBasis {
 public:
  CocycleBasis(int n, int d, std::uint32_t q);

  // Adds a d-face. Returns true if its boundary was already in the span
  // (beta_d went up), false if beta_{d-1} went down.
  bool add(FaceRank face);
  bool in_span(FaceRank face) const;
  // beta_{d-1}(Y; F_q).
  std::size_t dimension() const { return dim_; }

 private:
  int boundary(FaceRank face, std::array<std::pair<std::size_t, int>,
                                         kMaxSimplexVertices>& out) const;

  int n_;
  int d_;
  double q_;
  std::size_t rows_;
  std::size_t dim_;
  std::vector<double> y_;  // rows_ x rows_, column i < dim_ is a cocycle
};

// Absent d-faces whose addition raises beta_d over F_q, sorted.
std::vector<FaceRank> shadow(const ComplexState& state, std::uint32_t q);
std::size_t shadow_size(const ComplexState& state, std::uint32_t q);

struct CoreComplex {
  int n = 0;
  int d = 0;
  std::vector<FaceRank> faces;     // sorted d-faces
  std::vector<FaceRank> ridges;    // sorted (d-1)-faces meeting a face
  std::vector<int> vertices;       // sorted vertex support
  bool empty() const { return faces.empty(); }
  bool spanning() const { return static_cast<int>(vertices.size()) == n; }
};

// Deletes d-faces that contain a (d-1)-face of degree one until none is
// left. With a seed, candidates are processed in a random order.
CoreComplex core(const ComplexState& state,
                 std::optional<std::uint64_t> order_seed = {});

// Classes of core faces connected through shared (d-1)-faces. Each class is
// itself a core. Largest first.
std::vector<CoreComplex> core_components(const CoreComplex& c);

// Integral H_{d-1} of the pure complex spanned by the core's faces.
HomologySummary core_homology(const CoreComplex& c);

// True iff some component of the core spans all n vertices and has finite
// H_{d-1} isomorphic to lt. Throws std::invalid_argument if lt is trivial.
bool giant_check(const ComplexState& state, const AbelianGroup& lt);

// n^{1 + d/2}, the geometric mean of n and n^{d+1}.
double default_shadow_threshold(int n, int d);

struct HittingOptions {
  std::uint64_t radius = 25;  // steps scanned on each side of m0
  std::uint32_t q0 = 10007;
  std::optional<double> threshold;  // default_shadow_threshold if unset
};

struct HittingReport {
  std::optional<std::uint64_t> m_burst;
  std::optional<std::uint64_t> m_giant;
  std::optional<std::uint64_t> m_shadow;
  bool coincide = false;
  bool burst_shadow_coincide = false;  // m_burst == m_shadow
  double threshold = 0;
  std::uint64_t scan_lo = 0;
  std::uint64_t scan_hi = 0;
  // Shadow sizes at m_burst - 1 and m_burst, when m_burst is present.
  std::optional<std::uint64_t> shadow_before;
  std::optional<std::uint64_t> shadow_at;
};

HittingReport hitting_time_experiment(const ProcessTrace& trace,
                                      const LTResult& lt,
                                      const HittingOptions& opt = {});

}  // namespace torsion

#endif  // TORSION_SHADOW_HPP_
