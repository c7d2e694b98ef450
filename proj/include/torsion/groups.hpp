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

// Finite abelian groups in invariant-factor form, their primary parts, and
// automorphism group orders.

#ifndef TORSION_GROUPS_HPP_
#define TORSION_GROUPS_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace torsion {

using BigInt = mpz_class;

// Invariant factors d_1 | d_2 | ... | d_k, every d_i >= 2. Empty means
// the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Accepts any positive cyclic orders (entries equal to 1 are ignored) and
  // brings them to canonical invariant-factor form.
  explicit AbelianGroup(std::vector<BigInt> cyclic_orders);
  static AbelianGroup cyclic(const BigInt& order);

  const std::vector<BigInt>& invariant_factors() const { return factors_; }
  bool trivial() const { return factors_.empty(); }
  BigInt order() const;
  double log_order() const;

  // "Z/2 x Z/4", ascending; the trivial group is "1".
  std::string literal() const;
  static AbelianGroup parse(const std::string& text);

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  // Orders by group order, then by factor list. Used as a map key only.
  friend std::strong_ordering operator<=>(const AbelianGroup& a,
                                          const AbelianGroup& b);

 private:
  std::vector<BigInt> factors_;
};

// A finite abelian q-group: prod_i Z/q^{lambda_i}, lambda weakly decreasing.
class PGroup {
 public:
  PGroup() = default;
  PGroup(std::uint64_t q, std::vector<int> partition);

  std::uint64_t q() const { return q_; }
  const std::vector<int>& partition() const { return partition_; }
  bool trivial() const { return partition_.empty(); }
  int size() const;  // |lambda|, so the order is q^size
  BigInt order() const;
  AbelianGroup to_abelian() const;
  // The abelian literal of the group, e.g. "Z/2 x Z/4".
  std::string literal() const { return to_abelian().literal(); }

  friend bool operator==(const PGroup&, const PGroup&) = default;
  friend std::strong_ordering operator<=>(const PGroup& a, const PGroup& b);

 private:
  std::uint64_t q_ = 2;
  std::vector<int> partition_;
};

// The Sylow q-subgroup.
PGroup sylow(const AbelianGroup& g, std::uint64_t q);

// Primary decomposition. Throws std::domain_error if an invariant factor
// cannot be factored within the built-in effort bounds.
std::vector<PGroup> primary_parts(const AbelianGroup& g);

BigInt aut_order(const PGroup& h);
BigInt aut_order(const AbelianGroup& g);
double log_aut_order(const AbelianGroup& g);

// Prime factorization by trial division and Pollard-Brent. Returns
// (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

// Every partition of s, each weakly decreasing, in reverse lexicographic order.
std::vector<std::vector<int>> partitions_of(int s);

}  // namespace torsion

#endif  // TORSION_GROUPS_HPP_
