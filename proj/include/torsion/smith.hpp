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

// Exact sparse integer matrices and their Smith normal form.

#ifndef TORSION_SMITH_HPP_
#define TORSION_SMITH_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace torsion {

using BigInt = mpz_class;

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  BigInt value;
};

// Column-major sparse matrix over Z. Zero entries are never stored.
class SparseIntMatrix {
 public:
  using Column = std::vector<std::pair<std::uint32_t, BigInt>>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nonzeros() const;

  // Adds v to entry (r, c); the entry is dropped if the sum is zero.
  void add(std::size_t r, std::size_t c, const BigInt& v);
  void add(std::size_t r, std::size_t c, long v) { add(r, c, BigInt(v)); }
  BigInt at(std::size_t r, std::size_t c) const;

  // Entries of column c sorted by row.
  const Column& column(std::size_t c) const { return cols_[c]; }
  void append_column(Column col);

  std::vector<MatrixEntry> triples() const;
  SparseIntMatrix transposed() const;

  // "rows cols nnz" header followed by one "r c value" line per entry.
  std::string to_text() const;
  static SparseIntMatrix from_text(const std::string& text);

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&);

 private:
  std::size_t rows_ = 0;
  std::vector<Column> cols_;
};

// Invariant factors d_1 | d_2 | ... | d_r, all >= 1, r = rank.
struct SmithForm {
  std::vector<BigInt> invariants;

  std::size_t rank() const { return invariants.size(); }
  // The invariant factors that exceed 1.
  std::vector<BigInt> torsion() const;
};

struct SmithOptions {
  // Entries longer than this many GMP limbs switch the elimination to
  // arithmetic modulo a nonzero maximal minor.
  std::size_t blowup_limbs = 4;
};

SmithForm smith_normal_form(const SparseIntMatrix& m);
SmithForm smith_normal_form(const SparseIntMatrix& m,
                            const SmithOptions& options);

}  // namespace torsion

#endif  // TORSION_SMITH_HPP_
