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

// The random d-complex process that adds one uniformly chosen d-face per step,
// the search for its largest torsion group, and the anatomy of the torsion
// burst around it.

#ifndef TORSION_LMPROCESS_HPP_
#define TORSION_LMPROCESS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "torsion/groups.hpp"
#include "torsion/simplicial.hpp"
#include "torsion/thresholds.hpp"

namespace torsion {

struct ProcessTrace {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::vector<FaceRank> order;  // face added at step m is order[m - 1]

  std::uint64_t length() const { return order.size(); }
  // The complex after m steps.
  ComplexState at(std::uint64_t m) const;
};

// Uniform random m_max-prefix of a uniform ordering of all d-faces
// (partial Fisher-Yates on face ranks, mt19937_64 seeded with `seed`).
ProcessTrace sample_trace(int n, int d, std::uint64_t m_max,
                          std::uint64_t seed);

// beta(m) for m in [m1, m2]; must be non-decreasing.
using BettiOracle = std::function<std::uint64_t(std::uint64_t)>;

// All m with m1 < m < m2 and beta(m-1) == beta(m) < beta(m+1), found by
// bisection on the increase positions of beta.
std::vector<std::uint64_t> find_jump_points(const BettiOracle& beta,
                                            std::uint64_t m1, std::uint64_t m2);
// The same with beta = top Betti number over F_q0 along the trace.
std::vector<std::uint64_t> find_jump_points(const ProcessTrace& trace,
                                            std::uint64_t m1, std::uint64_t m2,
                                            std::uint32_t q0);

struct SearchOptions {
  std::uint64_t window_radius = 100;
  std::uint32_t q0 = 10007;
  ProcessConstants constants;
};

struct LTResult {
  AbelianGroup group;
  std::uint64_t m0 = 0;      // first step of the run of `group` ending at m_peak
  std::uint64_t m_peak = 0;  // jump point where the maximum was observed
  std::vector<std::uint64_t> jump_points;
  std::vector<AbelianGroup> jump_torsion;  // torsion at each jump point
  bool trivial = true;
};

// Torsion part of H_{d-1} after m steps.
AbelianGroup torsion_at(const ProcessTrace& trace, std::uint64_t m);

// Requires trace.length() >= m_star + window_radius.
LTResult lt_search(const ProcessTrace& trace, const SearchOptions& opt = {});

// Torsion of H_{d-1} for every m in [m_lo, m_hi].
std::vector<AbelianGroup> torsion_sequence(const ProcessTrace& trace,
                                           std::uint64_t m_lo,
                                           std::uint64_t m_hi);

struct BurstRecord {
  AbelianGroup lt;
  std::uint64_t m0 = 0;
  std::vector<AbelianGroup> subcritical;    // G_{-1}, G_{-2}, ...
  std::vector<AbelianGroup> supercritical;  // G_{+1}, G_{+2}, ...
  std::uint64_t duration = 0;
  int phases = 1;
  bool unimodal = true;
  std::uint64_t block_start = 0;  // first and last index of the block B
  std::uint64_t block_end = 0;
  // Nontrivial episodes seen outside B (diagnostic only).
  std::uint64_t other_episodes = 0;
};

// sequence[i] is the torsion at index i; m0 indexes into it and must hold
// the nontrivial group lt. Indices in the returned record are sequence
// indices.
BurstRecord burst_analysis(const std::vector<AbelianGroup>& sequence,
                           const AbelianGroup& lt, std::uint64_t m0);

// Runs burst_analysis on the trace around a nontrivial search result, with
// indices converted to process steps. Throws std::out_of_range if the block
// reaches the end of the trace.
BurstRecord analyze_burst(const ProcessTrace& trace, const LTResult& lt);

}  // namespace torsion

#endif  // TORSION_LMPROCESS_HPP_
