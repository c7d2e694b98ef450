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

// Q-acyclic 2-complexes with complete 1-skeleton: membership tests, the
// basis-exchange Markov chain, and exhaustive enumeration for small n.

#ifndef TORSION_QTREES_HPP_
#define TORSION_QTREES_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "torsion/groups.hpp"
#include "torsion/simplicial.hpp"

namespace torsion {

struct TwoTree {
  int n = 0;
  std::vector<FaceRank> faces;  // sorted triangle ranks

  ComplexState state() const { return ComplexState(n, 2, faces); }
};

// All triangles through vertex 0.
TwoTree initial_tree(int n);

// True iff there are C(n-1, 2) faces whose boundary columns are independent
// over Q. Rank is first tested modulo a random prime drawn from `rng`; on a
// deficiency two fresh primes are tried, then an exact integer rank.
bool is_qacyclic(const std::vector<FaceRank>& faces, int n,
                 std::mt19937_64& rng);
bool is_qacyclic(const std::vector<FaceRank>& faces, int n);

// Same truth value as is_qacyclic, decided by an exact determinant of the
// reduced boundary matrix (edges avoiding vertex 0). Only for small n.
std::int64_t reduced_determinant(const std::vector<FaceRank>& faces, int n);

// True iff the distinct values of `degrees` form a run of consecutive
// integers.
bool degrees_consecutive(const std::vector<int>& degrees);

// Reference chain state. Each step draws a uniform face slot and a uniform
// absent triangle, and swaps them iff the result is Q-acyclic.
class ChainState {
 public:
  ChainState(TwoTree tree, std::uint64_t seed);

  const TwoTree& tree() const { return tree_; }
  std::uint64_t step() const { return step_; }
  const std::vector<int>& edge_degrees() const { return degrees_; }
  // histogram()[k] = number of edges of degree k.
  const std::vector<std::size_t>& histogram() const { return hist_; }
  // Faces in slot order (the order proposals index into).
  const std::vector<FaceRank>& slots() const { return slots_; }
  bool degrees_consistent() const;

  struct Proposal {
    std::size_t slot;
    FaceRank face;
  };
  Proposal propose();
  // Replaces the face in `slot` by `face` and advances the step counter.
  void apply(const Proposal& p);
  void hold() { ++step_; }
  std::mt19937_64& prime_rng() { return prime_rng_; }

 private:
  TwoTree tree_;
  std::vector<FaceRank> slots_;
  std::vector<bool> present_;
  std::vector<int> degrees_;
  std::vector<std::size_t> hist_;
  std::uint64_t step_ = 0;
  std::mt19937_64 rng_;
  std::mt19937_64 prime_rng_;
};

// One step of the reference chain; returns true if the swap was accepted.
bool chain_step(ChainState& state);
bool t0_reached(const ChainState& s);

// The same chain with the reduced boundary matrix's inverse kept modulo a
// random 23-bit prime. Accepted swaps are rank-one corrections that are
// queued and folded into the stored inverse kBatch at a time. A swap is
// rejected when the pivot vanishes modulo that prime.
class FastChain {
 public:
  FastChain(int n, std::uint64_t seed);

  bool step();  // true if accepted
  std::uint64_t steps() const { return state_.step(); }
  std::uint64_t accepted() const { return accepted_; }
  bool t0_reached() const;
  const ChainState& state() const { return state_; }
  TwoTree tree() const;

 private:
  static constexpr std::size_t kBatch = 64;

  std::size_t row_of_edge(int a, int b) const;
  void flush();

  int n_;
  std::size_t dim_;
  std::size_t stride_;  // row length, dim_ rounded up for vector blocks
  std::uint32_t p_;
  ChainState state_;
  // Residues stored as doubles; see qtrees.cpp.
  std::vector<double> inv_;  // dim_ rows, row-major
  std::vector<double> etas_a_;
  std::vector<double> etas_b_;
  std::size_t pending_ = 0;
  std::uint64_t accepted_ = 0;
};

struct TreeSample {
  TwoTree tree;
  std::uint64_t t0 = 0;
  std::uint64_t steps = 0;
  std::uint64_t accepted = 0;
};

// Runs the chain from the cone until the degree rule first holds at t0,
// then to 2 t0. Throws MixingTimeout if t0 exceeds `cap` steps.
TreeSample sample_tree(int n, std::uint64_t seed,
                       std::uint64_t cap = 10'000'000);

// Every Q-acyclic complex on n <= 6 vertices, faces sorted, list ordered by
// the subset enumeration. With a cache directory the list is read from, or
// written to, "qacyclic_n<n>.faces" there.
std::vector<TwoTree> enumerate_qacyclic(
    int n, const std::optional<std::filesystem::path>& cache_dir = {});

struct KalaiSum {
  BigInt sum;       // sum of |H_1|^2 over all Q-acyclic complexes
  BigInt expected;  // n^{C(n-2, 2)}
  std::size_t complexes = 0;
  std::map<AbelianGroup, std::size_t> h1_counts;
};
KalaiSum kalai_sum(int n,
                   const std::optional<std::filesystem::path>& cache_dir = {});

}  // namespace torsion

#endif  // TORSION_QTREES_HPP_
