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

// Word-size prime field arithmetic and sparse rank over F_p.

#ifndef TORSION_MODULAR_HPP_
#define TORSION_MODULAR_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace torsion {

class SparseIntMatrix;

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Inverse of a modulo the prime p; a must be nonzero mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Uniform random prime in [lo, hi).
std::uint64_t random_prime(std::mt19937_64& rng, std::uint64_t lo,
                           std::uint64_t hi);

// Sparse column over F_p: (row, value) pairs, values already reduced.
using ModColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Rank over F_p of the matrix whose columns are given. p must be a prime
// below 2^32.
std::size_t rank_mod_p(std::size_t rows, const std::vector<ModColumn>& cols,
                       std::uint32_t p);
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);

struct ModpElimination {
  std::size_t rank = 0;
  // Pivot k sits at (pivot_rows[k], pivot_cols[k]) with value
  // pivot_values[k] at the time it was chosen.
  std::vector<std::uint32_t> pivot_rows;
  std::vector<std::uint32_t> pivot_cols;
  std::vector<std::uint32_t> pivot_values;
};
ModpElimination eliminate_mod_p(std::size_t rows,
                                const std::vector<ModColumn>& cols,
                                std::uint32_t p);

// Determinant of a square matrix over F_p, sign included.
std::uint32_t det_mod_p(std::size_t n, const std::vector<ModColumn>& cols,
                        std::uint32_t p);

// Reduces an integer matrix entrywise into F_p.
std::vector<ModColumn> reduce_mod_p(const SparseIntMatrix& m, std::uint32_t p);

}  // namespace torsion

#endif  // TORSION_MODULAR_HPP_
