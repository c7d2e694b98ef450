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

#include "torsion/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "torsion/modular.hpp"

namespace torsion {
namespace {

// Facets of every face, as indices into a dense ridge table.
struct Incidence {
  int k;  // facets per face
  std::vector<FaceRank> facet;  // faces.size() * k
};

Incidence incidence(const ComplexState& state) {
  const int d = state.d();
  Incidence inc{d + 1, {}};
  inc.facet.resize(state.face_count() * inc.k);
  for (std::size_t j = 0; j < state.face_count(); ++j) {
    facet_ranks(state.faces()[j], d,
                std::span<FaceRank>(inc.facet.data() + j * inc.k, inc.k));
  }
  return inc;
}

}  // namespace

CollapseResult collapse_reduce(const ComplexState& state) {
  const std::size_t ridges = binomial(state.n(), state.d());
  const std::size_t m = state.face_count();
  const Incidence inc = incidence(state);
  std::vector<std::uint32_t> degree(ridges, 0);
  std::vector<std::uint32_t> xor_face(ridges, 0);
  for (std::uint32_t j = 0; j < m; ++j) {
    for (int i = 0; i < inc.k; ++i) {
      const FaceRank r = inc.facet[j * inc.k + i];
      ++degree[r];
      xor_face[r] ^= j;
    }
  }
  std::vector<bool> face_gone(m, false);
  std::vector<bool> ridge_gone(ridges, false);
  std::vector<FaceRank> queue;
  for (FaceRank r = 0; r < ridges; ++r) {
    if (degree[r] == 1) queue.push_back(r);
  }
  CollapseResult out;
  // LIFO order; the collapsed homotopy type does not depend on it.
  while (!queue.empty()) {
    const FaceRank r = queue.back();
    queue.pop_back();
    if (degree[r] != 1) continue;
    const std::uint32_t g = xor_face[r];
    face_gone[g] = true;
    ridge_gone[r] = true;
    ++out.pairs;
    for (int i = 0; i < inc.k; ++i) {
      const FaceRank s = inc.facet[g * inc.k + i];
      --degree[s];
      xor_face[s] ^= g;
      if (degree[s] == 1) queue.push_back(s);
    }
  }
  for (FaceRank r = 0; r < ridges; ++r) {
    if (!ridge_gone[r]) out.ridges.push_back(r);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!face_gone[j]) out.faces.push_back(state.faces()[j]);
  }
  return out;
}

SparseIntMatrix reduced_boundary(const ComplexState& state,
                                 const CollapseResult& result) {
  const int d = state.d();
  std::unordered_map<FaceRank, std::uint32_t> row_of;
  std::vector<std::array<FaceRank, kMaxSimplexVertices>> fr(result.faces.size());
  for (std::size_t c = 0; c < result.faces.size(); ++c) {
    facet_ranks(result.faces[c], d, fr[c]);
    for (int i = 0; i <= d; ++i) row_of.emplace(fr[c][i], 0);
  }
  // Rows in colex order of the ridges that remain incident.
  std::vector<FaceRank> rows;
  rows.reserve(row_of.size());
  for (const auto& [r, unused] : row_of) rows.push_back(r);
  std::sort(rows.begin(), rows.end());
  for (std::uint32_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
  SparseIntMatrix m(rows.size(), result.faces.size());
  for (std::size_t c = 0; c < result.faces.size(); ++c) {
    for (int i = 0; i <= d; ++i) {
      m.add(row_of[fr[c][i]], c, (i % 2 == 0) ? 1L : -1L);
    }
  }
  return m;
}

std::size_t top_rank_mod_q(const ComplexState& state, std::uint32_t q) {
  const CollapseResult cr = collapse_reduce(state);
  if (cr.faces.empty()) return cr.pairs;
  return cr.pairs + rank_mod_p(reduced_boundary(state, cr), q);
}

std::uint64_t betti_mod_q(const ComplexState& state, int i, std::uint32_t q) {
  if (!is_prime(q)) throw std::invalid_argument("betti_mod_q: q must be prime");
  const int n = state.n();
  const int d = state.d();
  if (i < 0 || i > d) throw std::invalid_argument("betti_mod_q: bad degree");
  // On the complete k-skeleton, rank d_k = C(n-1, k) over any field.
  auto rank_boundary = [&](int k) -> std::uint64_t {
    if (k <= 0 || k > d) return 0;
    if (k < d) return binomial(n - 1, k);
    return top_rank_mod_q(state, q);
  };
  return state.count(i) - rank_boundary(i) - rank_boundary(i + 1);
}

TopHomology top_homology(const ComplexState& state) {
  const CollapseResult cr = collapse_reduce(state);
  std::size_t rank = cr.pairs;
  std::vector<BigInt> torsion;
  if (!cr.faces.empty()) {
    const SmithForm snf = smith_normal_form(reduced_boundary(state, cr));
    rank += snf.rank();
    torsion = snf.torsion();
  }
  TopHomology out;
  out.lower.betti = binomial(state.n() - 1, state.d()) - rank;
  out.lower.torsion = AbelianGroup(torsion);
  out.top.betti = state.face_count() - rank;
  return out;
}

HomologySummary integer_homology(const ComplexState& state, int i) {
  if (i == state.d() - 1) return top_homology(state).lower;
  if (i == state.d()) return top_homology(state).top;
  throw std::invalid_argument("integer_homology: degree must be d-1 or d");
}

}  // namespace torsion
