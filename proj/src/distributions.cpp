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

#include "torsion/distributions.hpp"

#include <stdexcept>
#include <vector>

namespace torsion {

double zeta(int s) {
  if (s < 2) throw std::invalid_argument("zeta: need s >= 2");
  // Euler-Maclaurin with N = 10 and six Bernoulli corrections.
  constexpr int kN = 10;
  static constexpr long double kB2j[] = {1.0L / 6, -1.0L / 30, 1.0L / 42,
                                         -1.0L / 30, 5.0L / 66,
                                         -691.0L / 2730};
  long double sum = 0;
  for (int n = 1; n < kN; ++n) sum += std::pow(static_cast<long double>(n), -s);
  const long double N = kN;
  sum += std::pow(N, 1 - s) / (s - 1) + std::pow(N, -s) / 2;
  long double rising = s;  // s (s+1) ... (s+2j-2)
  long double fact = 2;    // (2j)!
  for (int j = 1; j <= 6; ++j) {
    sum += kB2j[j - 1] / fact * rising * std::pow(N, -s - 2 * j + 1);
    rising *= static_cast<long double>(s + 2 * j - 1) * (s + 2 * j);
    fact *= static_cast<long double>(2 * j + 1) * (2 * j + 2);
  }
  return static_cast<double>(sum);
}

double cl_normalizer(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("cl_normalizer: q must be prime");
  long double prod = 1;
  long double term = 1;
  for (int k = 1; k < 2000; ++k) {
    term /= static_cast<long double>(q);
    if (term < 1e-17L) break;
    prod *= 1 - term;
  }
  return static_cast<double>(prod);
}

double cl_probability(const PGroup& h) {
  return cl_normalizer(h.q()) / aut_order(h).get_d();
}

namespace {

// prod_{i>=from} zeta(i), stopping once zeta(i) - 1 is negligible.
long double zeta_tail_product(int from) {
  long double prod = 1;
  for (int i = from; i < 200; ++i) {
    const long double z = zeta(i);
    if (z - 1 < 1e-18L) break;
    prod *= z;
  }
  return prod;
}

}  // namespace

double lambda_k_normalizer(int k) {
  if (k < 1) {
    throw std::invalid_argument("lambda_k: k must be positive");
  }
  return static_cast<double>(1 / zeta_tail_product(k + 1));
}

double lambda_k(const AbelianGroup& g, int k) {
  const double norm = lambda_k_normalizer(k);
  if (g.trivial()) return norm;
  return norm * std::exp(-k * g.log_order() - log_aut_order(g));
}

PhaseSeries expected_phases_series() {
  PhaseSeries out{};
  long double inner = 0;
  long double prefix = 1;  // prod_{j<i} p_j
  for (int i = 1; i < 200; ++i) {
    inner += prefix;
    const long double p_i = 1 - 1 / zeta_tail_product(i + 1);
    if (i == 1) out.p1 = static_cast<double>(p_i);
    prefix *= p_i;
    if (prefix < 1e-10L) break;
  }
  out.inner_sum = static_cast<double>(inner);
  out.value = static_cast<double>(2 * inner - 1);
  return out;
}

GroupDistribution<PGroup> cl_distribution(std::uint64_t q,
                                          double max_residual) {
  GroupDistribution<PGroup> d;
  const double norm = cl_normalizer(q);
  double mass = 0;
  for (int s = 0; s < 200; ++s) {
    for (auto& part : partitions_of(s)) {
      PGroup h(q, std::move(part));
      const double w = norm / aut_order(h).get_d();
      mass += w;
      d.weights.emplace(std::move(h), w);
    }
    if (1 - mass < max_residual) break;
  }
  d.residual = std::max(0.0, 1 - mass);
  return d;
}

GroupDistribution<AbelianGroup> lambda_k_distribution(int k,
                                                      std::uint64_t max_order) {
  const double norm = lambda_k_normalizer(k);
  std::vector<std::uint64_t> spf(max_order + 1, 0);
  for (std::uint64_t i = 2; i <= max_order; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j <= max_order; j += i) {
      if (!spf[j]) spf[j] = i;
    }
  }
  GroupDistribution<AbelianGroup> d;
  double mass = 0;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    // Primary pieces: for each p^a || n, the cyclic-order lists of every
    // partition of a.
    std::vector<std::vector<std::vector<BigInt>>> pieces;
    std::uint64_t m = n;
    while (m > 1) {
      const std::uint64_t p = spf[m];
      int a = 0;
      while (m % p == 0) {
        m /= p;
        ++a;
      }
      std::vector<std::vector<BigInt>> opts;
      for (const auto& part : partitions_of(a)) {
        std::vector<BigInt> orders;
        for (int e : part) {
          BigInt r;
          mpz_ui_pow_ui(r.get_mpz_t(), p, e);
          orders.push_back(r);
        }
        opts.push_back(std::move(orders));
      }
      pieces.push_back(std::move(opts));
    }
    std::vector<std::size_t> idx(pieces.size(), 0);
    while (true) {
      std::vector<BigInt> orders;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& o = pieces[i][idx[i]];
        orders.insert(orders.end(), o.begin(), o.end());
      }
      AbelianGroup g(orders);
      const double w = norm / (std::pow(static_cast<double>(n), k) *
                               aut_order(g).get_d());
      mass += w;
      d.weights.emplace(std::move(g), w);
      std::size_t i = 0;
      while (i < pieces.size() && ++idx[i] == pieces[i].size()) {
        idx[i] = 0;
        ++i;
      }
      if (i == pieces.size()) break;
    }
  }
  d.residual = std::max(0.0, 1 - mass);
  return d;
}

}  // namespace torsion
