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

#include "torsion/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

#include "torsion/modular.hpp"
#include "torsion/smith.hpp"

namespace torsion {
namespace {

// Rank of a (d-1)-face avoiding vertex 0 among all such faces.
std::size_t shifted_rank(std::span<const int> v, std::size_t skip) {
  std::size_t r = 0;
  int pos = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == skip) continue;
    r += binomial(v[i] - 1, pos + 1);
    ++pos;
  }
  return r;
}

double reduce(double x, double q) {
  double r = x - std::floor(x / q) * q;
  if (r < 0) r += q;
  if (r >= q) r -= q;
  return r;
}

}  // namespace

CocycleBasis::CocycleBasis(int n, int d, std::uint32_t q)
    : n_(n), d_(d), q_(q), rows_(binomial(n - 1, d)), dim_(binomial(n - 1, d)) {
  if (d < 1 || n < d + 2) throw std::invalid_argument("CocycleBasis: bad (n, d)");
  if (q >= (1u << 26) || !is_prime(q)) {
    throw std::invalid_argument("CocycleBasis: q must be a prime below 2^26");
  }
  y_.assign(rows_ * rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) y_[i * rows_ + i] = 1.0;
}

int CocycleBasis::boundary(
    FaceRank face,
    std::array<std::pair<std::size_t, int>, kMaxSimplexVertices>& out) const {
  const Simplex s = face_unrank(face, n_, d_);
  const auto v = s.vertices();
  int k = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    // Facets through vertex 0 carry no coordinate.
    if (v[0] == 0 && i != 0) continue;
    out[k++] = {shifted_rank(v, i), i % 2 == 0 ? 1 : -1};
  }
  return k;
}

bool CocycleBasis::in_span(FaceRank face) const {
  std::array<std::pair<std::size_t, int>, kMaxSimplexVertices> col;
  const int k = boundary(face, col);
  for (std::size_t i = 0; i < dim_; ++i) {
    double w = 0;
    for (int c = 0; c < k; ++c) {
      const double v = y_[col[c].first * rows_ + i];
      w += col[c].second > 0 ? v : q_ - v;
    }
    if (reduce(w, q_) != 0) return false;
  }
  return true;
}

bool CocycleBasis::add(FaceRank face) {
  std::array<std::pair<std::size_t, int>, kMaxSimplexVertices> col;
  const int k = boundary(face, col);
  std::vector<double> w(dim_, 0.0);
  for (int c = 0; c < k; ++c) {
    const double* row = &y_[col[c].first * rows_];
    const double sign = col[c].second;
    for (std::size_t i = 0; i < dim_; ++i) w[i] += sign * row[i];
  }
  std::size_t pivot = dim_;
  for (std::size_t i = dim_; i-- > 0;) {
    w[i] = reduce(w[i], q_);
    if (w[i] != 0 && pivot == dim_) pivot = i;
  }
  if (pivot == dim_) return true;
  // Clear w on every other representative using the pivot one, then drop it.
  const auto q = static_cast<std::uint64_t>(q_);
  const std::uint64_t inv = inv_mod(static_cast<std::uint64_t>(w[pivot]), q);
  std::vector<double> g(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    g[i] = static_cast<double>(static_cast<std::uint64_t>(w[i]) * inv % q);
  }
  const std::size_t last = dim_ - 1;
  for (std::size_t r = 0; r < rows_; ++r) {
    double* row = &y_[r * rows_];
    const double yk = row[pivot];
    if (yk != 0) {
      for (std::size_t i = 0; i < dim_; ++i) {
        row[i] = reduce(row[i] - g[i] * yk, q_);
      }
    }
    row[pivot] = row[last];
    row[last] = 0;
  }
  --dim_;
  return false;
}

std::vector<FaceRank> shadow(const ComplexState& state, std::uint32_t q) {
  const int n = state.n(), d = state.d();
  const auto total = binomial(n, d + 1);
  std::vector<FaceRank> out;
  if (state.face_count() == total) return out;
  CocycleBasis basis(n, d, q);
  for (auto f : state.faces()) basis.add(f);
  std::vector<bool> present(total, false);
  for (auto f : state.faces()) present[f] = true;
  for (FaceRank f = 0; f < total; ++f) {
    if (!present[f] && basis.in_span(f)) out.push_back(f);
  }
  return out;
}

std::size_t shadow_size(const ComplexState& state, std::uint32_t q) {
  return shadow(state, q).size();
}

CoreComplex core(const ComplexState& state,
                 std::optional<std::uint64_t> order_seed) {
  const int n = state.n(), d = state.d();
  const auto& faces = state.faces();
  std::vector<int> deg(binomial(n, d), 0);
  std::vector<std::vector<std::uint32_t>> incident(deg.size());
  std::vector<FaceRank> fr(d + 1);
  for (std::uint32_t j = 0; j < faces.size(); ++j) {
    facet_ranks(faces[j], d, fr);
    for (auto r : fr) {
      ++deg[r];
      incident[r].push_back(j);
    }
  }
  std::vector<bool> alive(faces.size(), true);
  std::vector<FaceRank> free;
  for (FaceRank r = 0; r < deg.size(); ++r) {
    if (deg[r] == 1) free.push_back(r);
  }
  std::mt19937_64 rng(order_seed.value_or(0));
  std::size_t head = 0;
  while (head < free.size()) {
    if (order_seed) {
      std::uniform_int_distribution<std::size_t> pick(head, free.size() - 1);
      std::swap(free[head], free[pick(rng)]);
    }
    const FaceRank r = free[head++];
    if (deg[r] != 1) continue;
    std::uint32_t j = 0;
    for (auto c : incident[r]) {
      if (alive[c]) {
        j = c;
        break;
      }
    }
    alive[j] = false;
    facet_ranks(faces[j], d, fr);
    for (auto s : fr) {
      if (--deg[s] == 1) free.push_back(s);
    }
  }
  CoreComplex c;
  c.n = n;
  c.d = d;
  std::vector<bool> vertex(n, false);
  for (std::size_t j = 0; j < faces.size(); ++j) {
    if (!alive[j]) continue;
    c.faces.push_back(faces[j]);
    for (int v : face_unrank(faces[j], n, d).vertices()) vertex[v] = true;
  }
  for (FaceRank r = 0; r < deg.size(); ++r) {
    if (deg[r] > 0) c.ridges.push_back(r);
  }
  for (int v = 0; v < n; ++v) {
    if (vertex[v]) c.vertices.push_back(v);
  }
  return c;
}

std::vector<CoreComplex> core_components(const CoreComplex& c) {
  const int d = c.d;
  const std::size_t m = c.faces.size();
  // Union-find over faces, joined through shared ridges.
  std::vector<std::uint32_t> parent(m);
  for (std::uint32_t j = 0; j < m; ++j) parent[j] = j;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::uint32_t> owner(binomial(c.n, d), UINT32_MAX);
  std::vector<FaceRank> fr(d + 1);
  for (std::uint32_t j = 0; j < m; ++j) {
    facet_ranks(c.faces[j], d, fr);
    for (auto r : fr) {
      if (owner[r] == UINT32_MAX) {
        owner[r] = j;
      } else {
        parent[find(j)] = find(owner[r]);
      }
    }
  }
  std::vector<std::uint32_t> label(m, UINT32_MAX);
  std::vector<CoreComplex> out;
  for (std::uint32_t j = 0; j < m; ++j) {
    const std::uint32_t root = find(j);
    if (label[root] == UINT32_MAX) {
      label[root] = static_cast<std::uint32_t>(out.size());
      out.emplace_back();
      out.back().n = c.n;
      out.back().d = d;
    }
    out[label[root]].faces.push_back(c.faces[j]);
  }
  for (auto& comp : out) {
    std::vector<bool> vertex(c.n, false);
    for (auto f : comp.faces) {
      facet_ranks(f, d, fr);
      comp.ridges.insert(comp.ridges.end(), fr.begin(), fr.end());
      for (int v : face_unrank(f, c.n, d).vertices()) vertex[v] = true;
    }
    std::sort(comp.ridges.begin(), comp.ridges.end());
    comp.ridges.erase(std::unique(comp.ridges.begin(), comp.ridges.end()),
                      comp.ridges.end());
    for (int v = 0; v < c.n; ++v) {
      if (vertex[v]) comp.vertices.push_back(v);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.faces.size() > b.faces.size();
  });
  return out;
}

HomologySummary core_homology(const CoreComplex& c) {
  HomologySummary h;
  if (c.faces.empty()) {
    throw std::invalid_argument("core_homology: empty core");
  }
  const int d = c.d;
  // Top boundary on (ridges x faces); its cokernel carries the torsion.
  std::vector<std::uint32_t> row_of(binomial(c.n, d), UINT32_MAX);
  for (std::uint32_t i = 0; i < c.ridges.size(); ++i) row_of[c.ridges[i]] = i;
  SparseIntMatrix top(c.ridges.size(), c.faces.size());
  std::vector<FaceRank> fr(d + 1);
  for (std::size_t j = 0; j < c.faces.size(); ++j) {
    facet_ranks(c.faces[j], d, fr);
    for (int i = 0; i <= d; ++i) top.add(row_of[fr[i]], j, i % 2 == 0 ? 1 : -1);
  }
  const SmithForm snf = smith_normal_form(top);
  std::size_t lower_rank = 0;
  if (d >= 2) {
    SparseIntMatrix lower(binomial(c.n, d - 1), c.ridges.size());
    std::vector<FaceRank> gr(d);
    for (std::size_t j = 0; j < c.ridges.size(); ++j) {
      facet_ranks(c.ridges[j], d - 1, gr);
      for (int i = 0; i < d; ++i) lower.add(gr[i], j, i % 2 == 0 ? 1 : -1);
    }
    lower_rank = smith_normal_form(lower).rank();
  }
  h.betti = c.ridges.size() - lower_rank - snf.rank();
  h.torsion = AbelianGroup(snf.torsion());
  return h;
}

bool giant_check(const ComplexState& state, const AbelianGroup& lt) {
  if (lt.trivial()) {
    throw std::invalid_argument("giant_check requires a nontrivial group");
  }
  const CoreComplex c = core(state);
  if (c.empty() || !c.spanning()) return false;
  for (const auto& comp : core_components(c)) {
    if (!comp.spanning()) continue;
    const HomologySummary h = core_homology(comp);
    if (h.betti == 0 && h.torsion == lt) return true;
  }
  return false;
}

double default_shadow_threshold(int n, int d) {
  return std::pow(static_cast<double>(n), 1.0 + 0.5 * d);
}

HittingReport hitting_time_experiment(const ProcessTrace& trace,
                                      const LTResult& lt,
                                      const HittingOptions& opt) {
  if (lt.trivial || lt.group.trivial()) {
    throw std::invalid_argument("hitting_time_experiment: trivial LT");
  }
  HittingReport rep;
  rep.threshold = opt.threshold.value_or(default_shadow_threshold(trace.n, trace.d));
  rep.scan_lo = lt.m0 > opt.radius ? lt.m0 - opt.radius : 1;
  rep.scan_hi = std::min<std::uint64_t>(trace.length(), lt.m0 + opt.radius);

  const auto seq = torsion_sequence(trace, rep.scan_lo, rep.scan_hi);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == lt.group) {
      rep.m_burst = rep.scan_lo + i;
      break;
    }
  }
  for (std::uint64_t m = rep.scan_lo; m <= rep.scan_hi; ++m) {
    if (giant_check(trace.at(m), lt.group)) {
      rep.m_giant = m;
      break;
    }
  }

  // Shadow sizes from scan_lo - 1 upward.
  const auto total = binomial(trace.n, trace.d + 1);
  CocycleBasis basis(trace.n, trace.d, opt.q0);
  std::vector<bool> present(total, false);
  const std::uint64_t start = rep.scan_lo - 1;
  for (std::uint64_t m = 0; m < start; ++m) {
    basis.add(trace.order[m]);
    present[trace.order[m]] = true;
  }
  auto size_now = [&] {
    std::uint64_t s = 0;
    for (FaceRank f = 0; f < total; ++f) {
      if (!present[f] && basis.in_span(f)) ++s;
    }
    return s;
  };
  for (std::uint64_t m = start; m <= rep.scan_hi; ++m) {
    if (m > start) {
      basis.add(trace.order[m - 1]);
      present[trace.order[m - 1]] = true;
    }
    const bool need_size =
        (!rep.m_shadow && m >= rep.scan_lo) ||
        (rep.m_burst && (m + 1 == *rep.m_burst || m == *rep.m_burst));
    if (!need_size) continue;
    const std::uint64_t s = size_now();
    if (rep.m_burst && m + 1 == *rep.m_burst) rep.shadow_before = s;
    if (rep.m_burst && m == *rep.m_burst) rep.shadow_at = s;
    if (!rep.m_shadow && m >= rep.scan_lo && s > rep.threshold) rep.m_shadow = m;
    if (rep.m_shadow && (!rep.m_burst || m >= *rep.m_burst)) break;
  }
  rep.burst_shadow_coincide =
      rep.m_burst && rep.m_shadow && *rep.m_burst == *rep.m_shadow;
  rep.coincide = rep.m_burst && rep.m_giant && rep.m_shadow &&
                 *rep.m_burst == *rep.m_giant && *rep.m_burst == *rep.m_shadow;
  return rep;
}

}  // namespace torsion
