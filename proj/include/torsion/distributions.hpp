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

// Cohen-Lenstra and lambda_k distributions on finite abelian groups, and the
// statistics used to compare them with sampled groups.

#ifndef TORSION_DISTRIBUTIONS_HPP_
#define TORSION_DISTRIBUTIONS_HPP_

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "torsion/errors.hpp"
#include "torsion/groups.hpp"

namespace torsion {

// Riemann zeta at an integer s >= 2, absolute error below 1e-14.
double zeta(int s);

// prod_{k>=1} (1 - q^{-k}).
double cl_normalizer(std::uint64_t q);
// cl_normalizer(q) / |Aut(h)|.
double cl_probability(const PGroup& h);

// prod_{i>=k+1} 1/zeta(i). Throws std::invalid_argument for k < 1.
double lambda_k_normalizer(int k);
// lambda_k_normalizer(k) / (|G|^k |Aut(G)|).
double lambda_k(const AbelianGroup& g, int k);

struct PhaseSeries {
  double p1;          // 1 - prod_{k>=2} 1/zeta(k)
  double inner_sum;   // sum_{i>=1} prod_{j<i} p_j
  double value;       // 2 * inner_sum - 1
};
PhaseSeries expected_phases_series();
inline double expected_phases() { return expected_phases_series().value; }

// A probability distribution with an explicit support and the mass of the
// truncated remainder.
template <typename G>
struct GroupDistribution {
  std::map<G, double> weights;
  double residual = 0.0;

  double probability(const G& g) const {
    auto it = weights.find(g);
    return it == weights.end() ? 0.0 : it->second;
  }
  double total() const {
    double s = residual;
    for (const auto& [g, w] : weights) s += w;
    return s;
  }
};

// Partitions enumerated by increasing size until the residual is below
// max_residual.
GroupDistribution<PGroup> cl_distribution(std::uint64_t q,
                                          double max_residual = 1e-6);
// All groups of order <= max_order.
GroupDistribution<AbelianGroup> lambda_k_distribution(int k,
                                                      std::uint64_t max_order);

// Moves the exact mass of each listed group out of the residual and into the
// explicit support, so a comparison against an empirical sample does not
// depend on where the truncation fell.
template <typename G>
void extend_support(GroupDistribution<G>& dist, const std::set<G>& groups,
                    const std::function<double(const G&)>& prob) {
  for (const auto& g : groups) {
    if (dist.weights.count(g)) continue;
    const double w = prob(g);
    dist.weights.emplace(g, w);
    dist.residual = std::max(0.0, dist.residual - w);
  }
}

template <typename G>
GroupDistribution<G> empirical(const std::map<G, std::size_t>& counts) {
  std::size_t total = 0;
  for (const auto& [g, c] : counts) total += c;
  if (total == 0) throw std::invalid_argument("empirical: no observations");
  GroupDistribution<G> d;
  for (const auto& [g, c] : counts) {
    if (c > 0) d.weights.emplace(g, static_cast<double>(c) / total);
  }
  return d;
}

// Half the L1 distance over the union of supports; each side's residual is
// mass the other side cannot match.
template <typename G>
double tv_distance(const GroupDistribution<G>& emp,
                   const GroupDistribution<G>& theo) {
  double s = emp.residual + theo.residual;
  for (const auto& [g, w] : emp.weights) s += std::abs(w - theo.probability(g));
  for (const auto& [g, w] : theo.weights) {
    if (!emp.weights.count(g)) s += w;
  }
  return 0.5 * s;
}

// count(trivial) / count(G) for every G with a positive count other than the
// trivial group itself.
template <typename G>
std::map<G, double> ratio_table(const std::map<G, std::size_t>& counts,
                                const G& trivial) {
  auto it = counts.find(trivial);
  if (it == counts.end() || it->second == 0) {
    throw UndefinedRatio("ratio_table: no trivial observations");
  }
  std::map<G, double> out;
  for (const auto& [g, c] : counts) {
    if (c == 0 || g == trivial) continue;
    out.emplace(g, static_cast<double>(it->second) / c);
  }
  return out;
}

}  // namespace torsion

#endif  // TORSION_DISTRIBUTIONS_HPP_
