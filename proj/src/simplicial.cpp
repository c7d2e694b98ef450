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

#include "torsion/simplicial.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "torsion/smith.hpp"

namespace torsion {
namespace {

constexpr int kBinomRows = kMaxVertexCount + 1;
constexpr int kBinomCols = kMaxSimplexVertices + 2;

struct BinomialTable {
  std::array<std::array<std::uint64_t, kBinomCols>, kBinomRows> c{};
  BinomialTable() {
    for (int n = 0; n < kBinomRows; ++n) {
      c[n][0] = 1;
      for (int k = 1; k < kBinomCols; ++k) {
        c[n][k] = n == 0 ? 0 : c[n - 1][k - 1] + c[n - 1][k];
      }
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

void check_vertices(std::span<const int> v) {
  if (v.empty() || v.size() > static_cast<std::size_t>(kMaxSimplexVertices)) {
    throw std::invalid_argument("simplex must have 1.." +
                                std::to_string(kMaxSimplexVertices) +
                                " vertices");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= kMaxVertexCount) {
      throw std::invalid_argument("vertex label out of range");
    }
    if (i > 0 && v[i] <= v[i - 1]) {
      throw std::invalid_argument("simplex vertices must be strictly increasing");
    }
  }
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (k > n) return 0;
  if (n >= kBinomRows || k >= kBinomCols) {
    throw std::out_of_range("binomial table bounds exceeded");
  }
  return table().c[n][k];
}

Simplex::Simplex(std::initializer_list<int> vertices)
    : Simplex(std::span<const int>(vertices.begin(), vertices.size())) {}

Simplex::Simplex(std::span<const int> vertices) {
  check_vertices(vertices);
  std::copy(vertices.begin(), vertices.end(), v_.begin());
  size_ = static_cast<std::uint8_t>(vertices.size());
}

Simplex Simplex::facet(std::size_t i) const {
  if (size_ < 2 || i >= size_) throw std::invalid_argument("no such facet");
  Simplex f;
  std::size_t w = 0;
  for (std::size_t j = 0; j < size_; ++j) {
    if (j != i) f.v_[w++] = v_[j];
  }
  f.size_ = static_cast<std::uint8_t>(size_ - 1);
  return f;
}

bool Simplex::contains(int vertex) const {
  return std::binary_search(v_.begin(), v_.begin() + size_, vertex);
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  // Colex: compare from the largest vertex down.
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (int i = a.size_ - 1; i >= 0; --i) {
    if (a.v_[i] != b.v_[i]) return a.v_[i] <=> b.v_[i];
  }
  return std::strong_ordering::equal;
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) s += ',';
    s += std::to_string(v_[i]);
  }
  return s + "}";
}

FaceRank face_rank(const Simplex& s) {
  FaceRank r = 0;
  const auto v = s.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    r += binomial(v[i], static_cast<int>(i) + 1);
  }
  return r;
}

FaceRank face_rank(const Simplex& s, int n) {
  if (s.size() == 0) throw std::invalid_argument("empty simplex");
  if (s.back() >= n) throw std::invalid_argument("vertex label exceeds n");
  return face_rank(s);
}

Simplex face_unrank(FaceRank r, int n, int k) {
  if (k < 0 || k + 1 > kMaxSimplexVertices || n > kMaxVertexCount ||
      k >= n) {
    throw std::invalid_argument("face_unrank: bad dimension");
  }
  if (r >= binomial(n, k + 1)) {
    throw std::invalid_argument("face_unrank: rank out of range");
  }
  std::array<int, kMaxSimplexVertices> v{};
  int hi = n - 1;
  for (int i = k; i >= 0; --i) {
    // Largest x in [i, hi] with C(x, i+1) <= r.
    int lo = i;
    int top = hi;
    while (lo < top) {
      const int mid = (lo + top + 1) / 2;
      if (binomial(mid, i + 1) <= r) {
        lo = mid;
      } else {
        top = mid - 1;
      }
    }
    v[i] = lo;
    r -= binomial(lo, i + 1);
    hi = lo - 1;
  }
  return Simplex(std::span<const int>(v.data(), static_cast<std::size_t>(k + 1)));
}

std::vector<Simplex> enumerate_faces(int n, int k) {
  if (k < 0 || k >= n) {
    throw std::invalid_argument("enumerate_faces requires 0 <= k < n");
  }
  const auto total = binomial(n, k + 1);
  std::vector<Simplex> out;
  out.reserve(total);
  // Odometer in colex order: increment the lowest vertex that can move.
  std::vector<int> v(k + 1);
  for (int i = 0; i <= k; ++i) v[i] = i;
  for (std::uint64_t r = 0; r < total; ++r) {
    out.emplace_back(std::span<const int>(v));
    int i = 0;
    while (i < k && v[i] + 1 == v[i + 1]) {
      v[i] = i;
      ++i;
    }
    ++v[i];
  }
  return out;
}

void facet_ranks(FaceRank r, int k, std::span<FaceRank> out) {
  const Simplex s = face_unrank(r, kMaxVertexCount, k);
  const auto v = s.vertices();
  // prefix[i] = rank contribution of v[0..i) at their own positions,
  // suffix contributions shift down one position.
  for (int i = 0; i <= k; ++i) {
    FaceRank f = 0;
    for (int j = 0; j < i; ++j) f += binomial(v[j], j + 1);
    for (int j = i + 1; j <= k; ++j) f += binomial(v[j], j);
    out[i] = f;
  }
}

ComplexState::ComplexState(int n, int d) : n_(n), d_(d) {
  if (d < 1 || d + 1 > kMaxSimplexVertices || n < d + 1 ||
      n > kMaxVertexCount) {
    throw std::invalid_argument("ComplexState: unsupported (n, d)");
  }
}

ComplexState::ComplexState(int n, int d, std::vector<FaceRank> faces)
    : ComplexState(n, d) {
  std::sort(faces.begin(), faces.end());
  if (std::adjacent_find(faces.begin(), faces.end()) != faces.end()) {
    throw std::invalid_argument("ComplexState: duplicate face");
  }
  if (!faces.empty() && faces.back() >= binomial(n, d + 1)) {
    throw std::invalid_argument("ComplexState: face rank out of range");
  }
  faces_ = std::move(faces);
}

ComplexState ComplexState::from_simplices(int n, int d,
                                          std::span<const Simplex> faces) {
  std::vector<FaceRank> ranks;
  ranks.reserve(faces.size());
  for (const auto& s : faces) {
    if (s.dimension() != d) {
      throw std::invalid_argument("face of wrong dimension: " + s.to_string());
    }
    ranks.push_back(face_rank(s, n));
  }
  return ComplexState(n, d, std::move(ranks));
}

bool ComplexState::contains(FaceRank r) const {
  return std::binary_search(faces_.begin(), faces_.end(), r);
}

std::vector<Simplex> ComplexState::simplices() const {
  std::vector<Simplex> out;
  out.reserve(faces_.size());
  for (auto r : faces_) out.push_back(face_unrank(r, n_, d_));
  return out;
}

std::uint64_t ComplexState::count(int k) const {
  if (k < 0 || k > d_) return 0;
  if (k == d_) return faces_.size();
  return binomial(n_, k + 1);
}

SparseIntMatrix boundary_matrix(const ComplexState& state, int k) {
  if (k < 1 || k > state.d()) {
    throw std::invalid_argument("boundary_matrix requires 1 <= k <= d");
  }
  const int n = state.n();
  const auto rows = binomial(n, k);
  std::vector<FaceRank> cols;
  if (k == state.d()) {
    cols = state.faces();
  } else {
    cols.resize(binomial(n, k + 1));
    for (FaceRank r = 0; r < cols.size(); ++r) cols[r] = r;
  }
  SparseIntMatrix m(rows, cols.size());
  std::array<FaceRank, kMaxSimplexVertices> fr{};
  for (std::size_t c = 0; c < cols.size(); ++c) {
    facet_ranks(cols[c], k, fr);
    for (int i = 0; i <= k; ++i) {
      m.add(fr[i], c, (i % 2 == 0) ? 1 : -1);
    }
  }
  return m;
}

std::vector<int> face_degrees(const ComplexState& state, int k) {
  if (k < 0 || k >= state.d()) {
    throw std::invalid_argument("face_degrees requires 0 <= k < d");
  }
  const int d = state.d();
  std::vector<int> deg(binomial(state.n(), k + 1), 0);
  std::vector<int> sub(k + 1);
  for (auto r : state.faces()) {
    const Simplex s = face_unrank(r, state.n(), d);
    // Every (k+1)-subset of the d+1 vertices.
    std::vector<bool> pick(d + 1, false);
    std::fill(pick.begin(), pick.begin() + k + 1, true);
    do {
      int w = 0;
      for (int i = 0; i <= d; ++i) {
        if (pick[i]) sub[w++] = s[i];
      }
      ++deg[face_rank(Simplex(std::span<const int>(sub)))];
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return deg;
}

void write_faces(std::ostream& out, std::span<const Simplex> faces) {
  for (const auto& s : faces) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ',';
      out << s[i] + 1;
    }
    out << '\n';
  }
}

std::vector<Simplex> read_faces(std::istream& in) {
  std::vector<Simplex> faces;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      if (line.empty() && !faces.empty()) break;  // blank line ends a block
      continue;
    }
    std::vector<int> v;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t pos = 0;
      const int label = std::stoi(tok, &pos);
      if (label < 1) throw std::invalid_argument("labels are 1-indexed");
      v.push_back(label - 1);
    }
    faces.emplace_back(std::span<const int>(v));
  }
  return faces;
}

}  // namespace torsion
