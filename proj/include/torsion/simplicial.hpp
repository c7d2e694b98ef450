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

// Face combinatorics for d-complexes on n vertices whose (d-1)-skeleton is
// complete. Faces are identified by their colexicographic rank; the complete
// lower skeleton is never stored.

#ifndef TORSION_SIMPLICIAL_HPP_
#define TORSION_SIMPLICIAL_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace torsion {

using FaceRank = std::uint64_t;

inline constexpr int kMaxSimplexVertices = 8;
inline constexpr int kMaxVertexCount = 512;

// C(n, k) for n < kMaxVertexCount and k < kMaxSimplexVertices + 1. Returns 0
// when k > n. Throws std::out_of_range outside the table.
std::uint64_t binomial(int n, int k);

// An abstract simplex: strictly increasing vertex labels in [0, n).
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<int> vertices);
  explicit Simplex(std::span<const int> vertices);

  int dimension() const { return static_cast<int>(size_) - 1; }
  std::size_t size() const { return size_; }
  std::span<const int> vertices() const { return {v_.data(), size_}; }
  int operator[](std::size_t i) const { return v_[i]; }
  int back() const { return v_[size_ - 1]; }

  // The face obtained by deleting the i-th vertex.
  Simplex facet(std::size_t i) const;
  bool contains(int vertex) const;

  friend bool operator==(const Simplex& a, const Simplex& b) {
    return a.vertices().size() == b.vertices().size() &&
           std::equal(a.v_.begin(), a.v_.begin() + a.size_, b.v_.begin());
  }
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

  std::string to_string() const;  // "{0,1,2}", 0-indexed

 private:
  std::array<int, kMaxSimplexVertices> v_{};
  std::uint8_t size_ = 0;
};

// Colex rank. Does not depend on n, but n is checked against the vertices.
FaceRank face_rank(const Simplex& s, int n);
FaceRank face_rank(const Simplex& s);
Simplex face_unrank(FaceRank r, int n, int k);

// All C(n, k+1) k-simplices in colex order.
std::vector<Simplex> enumerate_faces(int n, int k);

// Ranks of the facets of the k-face with rank r, in vertex-deletion order
// (facet i drops vertex i and carries sign (-1)^i).
void facet_ranks(FaceRank r, int k, std::span<FaceRank> out);

// A d-complex on n vertices with complete (d-1)-skeleton.
class ComplexState {
 public:
  ComplexState(int n, int d);
  ComplexState(int n, int d, std::vector<FaceRank> faces);
  static ComplexState from_simplices(int n, int d,
                                     std::span<const Simplex> faces);

  int n() const { return n_; }
  int d() const { return d_; }
  // Sorted, distinct ranks of the d-faces.
  const std::vector<FaceRank>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  bool contains(FaceRank r) const;
  std::vector<Simplex> simplices() const;

  // Number of k-faces of the (implicit) complete skeleton, or the present
  // d-faces when k == d.
  std::uint64_t count(int k) const;

 private:
  int n_;
  int d_;
  std::vector<FaceRank> faces_;
};

class SparseIntMatrix;

// Boundary operator from k-chains to (k-1)-chains. Rows follow colex order of
// the complete (k-1)-skeleton. Columns follow colex order of the k-skeleton
// for k < d and the sorted face list for k == d.
SparseIntMatrix boundary_matrix(const ComplexState& state, int k);

// For every k-face of the complete skeleton (indexed by rank) the number of
// d-faces of the state containing it.
std::vector<int> face_degrees(const ComplexState& state, int k);

// One face per line, comma separated, 1-indexed vertex labels.
void write_faces(std::ostream& out, std::span<const Simplex> faces);
std::vector<Simplex> read_faces(std::istream& in);

}  // namespace torsion

#endif  // TORSION_SIMPLICIAL_HPP_
