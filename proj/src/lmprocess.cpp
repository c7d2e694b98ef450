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

#include "torsion/lmprocess.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "torsion/homology.hpp"
#include "torsion/modular.hpp"

namespace torsion {

ComplexState ProcessTrace::at(std::uint64_t m) const {
  if (m > order.size()) throw std::out_of_range("ProcessTrace::at beyond trace");
  return ComplexState(n, d, std::vector<FaceRank>(order.begin(),
                                                  order.begin() + m));
}

ProcessTrace sample_trace(int n, int d, std::uint64_t m_max,
                          std::uint64_t seed) {
  ComplexState shape(n, d);  // validates (n, d)
  const std::uint64_t total = binomial(n, d + 1);
  if (m_max > total) {
    throw std::invalid_argument("sample_trace: m_max exceeds C(n, d+1)");
  }
  std::vector<FaceRank> ranks(total);
  for (FaceRank r = 0; r < total; ++r) ranks[r] = r;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < m_max; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(i, total - 1);
    std::swap(ranks[i], ranks[pick(rng)]);
  }
  ranks.resize(m_max);
  return ProcessTrace{n, d, seed, std::move(ranks)};
}

std::vector<std::uint64_t> find_jump_points(const BettiOracle& beta,
                                            std::uint64_t m1,
                                            std::uint64_t m2) {
  if (m1 >= m2) return {};
  // Increase positions s in (m1, m2] with beta(s) > beta(s-1).
  std::vector<std::uint64_t> rises;
  std::map<std::uint64_t, std::uint64_t> memo;
  auto b = [&](std::uint64_t m) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    return memo[m] = beta(m);
  };
  auto rec = [&](auto&& self, std::uint64_t lo, std::uint64_t hi) -> void {
    if (b(lo) == b(hi)) return;
    if (hi == lo + 1) {
      rises.push_back(hi);
      return;
    }
    const std::uint64_t mid = lo + (hi - lo) / 2;
    self(self, lo, mid);
    self(self, mid, hi);
  };
  rec(rec, m1, m2);
  std::vector<std::uint64_t> jumps;
  for (std::uint64_t s : rises) {
    const std::uint64_t m = s - 1;
    if (m <= m1) continue;
    if (std::binary_search(rises.begin(), rises.end(), m)) continue;
    jumps.push_back(m);
  }
  return jumps;
}

std::vector<std::uint64_t> find_jump_points(const ProcessTrace& trace,
                                            std::uint64_t m1, std::uint64_t m2,
                                            std::uint32_t q0) {
  if (!is_prime(q0)) throw std::invalid_argument("q0 must be prime");
  if (m2 > trace.length()) throw std::invalid_argument("m2 beyond trace");
  return find_jump_points(
      [&](std::uint64_t m) -> std::uint64_t {
        const ComplexState s = trace.at(m);
        return s.face_count() - top_rank_mod_q(s, q0);
      },
      m1, m2);
}

AbelianGroup torsion_at(const ProcessTrace& trace, std::uint64_t m) {
  return top_homology(trace.at(m)).lower.torsion;
}

LTResult lt_search(const ProcessTrace& trace, const SearchOptions& opt) {
  const std::uint64_t ms = m_star(trace.n, trace.d, opt.constants);
  if (trace.length() < ms + opt.window_radius) {
    throw std::invalid_argument("lt_search: trace shorter than m* + radius");
  }
  const std::uint64_t m1 = ms > opt.window_radius ? ms - opt.window_radius : 0;
  const std::uint64_t m2 = ms + opt.window_radius;
  LTResult out;
  out.jump_points = find_jump_points(trace, m1, m2, opt.q0);
  BigInt best = 1;
  for (std::uint64_t m : out.jump_points) {
    AbelianGroup g = torsion_at(trace, m);
    const BigInt ord = g.order();
    if (ord > best) {  // strict: ties keep the earliest
      best = ord;
      out.group = g;
      out.m_peak = m;
      out.trivial = false;
    }
    out.jump_torsion.push_back(std::move(g));
  }
  if (out.trivial) return out;
  // Walk back over the run of identical torsion ending at the peak.
  out.m0 = out.m_peak;
  while (out.m0 > 0 && torsion_at(trace, out.m0 - 1) == out.group) --out.m0;
  return out;
}

std::vector<AbelianGroup> torsion_sequence(const ProcessTrace& trace,
                                           std::uint64_t m_lo,
                                           std::uint64_t m_hi) {
  if (m_lo > m_hi || m_hi > trace.length()) {
    throw std::invalid_argument("torsion_sequence: bad range");
  }
  std::vector<AbelianGroup> out;
  out.reserve(m_hi - m_lo + 1);
  for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
    out.push_back(torsion_at(trace, m));
  }
  return out;
}

BurstRecord burst_analysis(const std::vector<AbelianGroup>& sequence,
                           const AbelianGroup& lt, std::uint64_t m0) {
  if (m0 >= sequence.size()) {
    throw std::invalid_argument("burst_analysis: m0 out of range");
  }
  if (lt.trivial() || sequence[m0].trivial()) {
    throw std::invalid_argument("burst_analysis: torsion at m0 is trivial");
  }
  if (sequence[m0] != lt) {
    throw std::invalid_argument("burst_analysis: sequence[m0] differs from lt");
  }
  BurstRecord rec;
  rec.lt = lt;
  rec.m0 = m0;
  auto scan = [&](std::int64_t step, std::vector<AbelianGroup>& found) {
    std::vector<AbelianGroup> seen{lt};
    std::int64_t i = static_cast<std::int64_t>(m0);
    while (true) {
      const std::int64_t j = i + step;
      if (j < 0 || j >= static_cast<std::int64_t>(sequence.size())) break;
      const AbelianGroup& g = sequence[j];
      if (g.trivial()) break;
      if (std::find(seen.begin(), seen.end(), g) == seen.end()) {
        seen.push_back(g);
        found.push_back(g);
      }
      i = j;
    }
    return static_cast<std::uint64_t>(i);
  };
  rec.block_start = scan(-1, rec.subcritical);
  rec.block_end = scan(+1, rec.supercritical);
  rec.duration = rec.block_end - rec.block_start + 1;
  rec.phases = static_cast<int>(rec.subcritical.size() +
                                rec.supercritical.size()) + 1;
  for (std::uint64_t i = rec.block_start; i < m0; ++i) {
    if (sequence[i].order() > sequence[i + 1].order()) rec.unimodal = false;
  }
  for (std::uint64_t i = m0; i < rec.block_end; ++i) {
    if (sequence[i].order() < sequence[i + 1].order()) rec.unimodal = false;
  }
  bool in_run = false;
  for (std::uint64_t i = 0; i < sequence.size(); ++i) {
    const bool inside = i >= rec.block_start && i <= rec.block_end;
    const bool nontrivial = !inside && !sequence[i].trivial();
    if (nontrivial && !in_run) ++rec.other_episodes;
    in_run = nontrivial;
  }
  return rec;
}

BurstRecord analyze_burst(const ProcessTrace& trace, const LTResult& lt) {
  if (lt.trivial) throw std::invalid_argument("analyze_burst: trivial LT");
  // Extend outward from m0 until trivial torsion is met on both sides.
  std::uint64_t lo = lt.m0;
  std::vector<AbelianGroup> below;  // torsion at m0-1, m0-2, ...
  while (lo > 0) {
    AbelianGroup g = torsion_at(trace, lo - 1);
    --lo;
    const bool stop = g.trivial();
    below.push_back(std::move(g));
    if (stop) break;
  }
  std::uint64_t hi = lt.m0;
  std::vector<AbelianGroup> above;
  while (true) {
    if (hi + 1 > trace.length()) {
      throw std::out_of_range("analyze_burst: burst runs past the trace end");
    }
    AbelianGroup g = torsion_at(trace, hi + 1);
    ++hi;
    const bool stop = g.trivial();
    above.push_back(std::move(g));
    if (stop) break;
  }
  std::vector<AbelianGroup> seq(below.rbegin(), below.rend());
  seq.push_back(lt.group);
  seq.insert(seq.end(), above.begin(), above.end());
  BurstRecord rec = burst_analysis(seq, lt.group, lt.m0 - lo);
  rec.m0 = lt.m0;
  rec.block_start += lo;
  rec.block_end += lo;
  // Diagnostic: runs of nontrivial jump points outside the block.
  rec.other_episodes = 0;
  bool in_run = false;
  for (std::size_t i = 0; i < lt.jump_points.size(); ++i) {
    const std::uint64_t m = lt.jump_points[i];
    const bool outside = m < rec.block_start || m > rec.block_end;
    const bool hit = outside && !lt.jump_torsion[i].trivial();
    if (hit && !in_run) ++rec.other_episodes;
    in_run = hit;
  }
  return rec;
}

}  // namespace torsion
