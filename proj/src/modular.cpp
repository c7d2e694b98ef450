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

#include "torsion/modular.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "torsion/smith.hpp"

namespace torsion {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t s : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % s == 0) return n == s;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64& rng, std::uint64_t lo,
                           std::uint64_t hi) {
  if (lo >= hi) throw std::invalid_argument("random_prime: empty range");
  std::uniform_int_distribution<std::uint64_t> pick(lo, hi - 1);
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    const std::uint64_t c = pick(rng);
    if (is_prime(c)) return c;
  }
  throw std::invalid_argument("random_prime: no prime found in range");
}

std::vector<ModColumn> reduce_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
  std::vector<ModColumn> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) {
      const auto x = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
      if (x != 0) out[c].emplace_back(r, x);
    }
  }
  return out;
}

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
  return rank_mod_p(m.rows(), reduce_mod_p(m, p), p);
}

namespace {

// Right-looking sparse elimination. Pivot column: fewest live entries;
// pivot row within it: shortest.
class ModpEliminator {
 public:
  using Row = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

  ModpEliminator(std::size_t rows, const std::vector<ModColumn>& cols,
                 std::uint32_t p)
      : p_(p), rows_(rows), col_rows_(cols.size()), col_count_(cols.size(), 0) {
    for (std::uint32_t c = 0; c < cols.size(); ++c) {
      for (const auto& [r, v] : cols[c]) {
        if (r >= rows) throw std::out_of_range("rank_mod_p: row out of range");
        if (v % p == 0) continue;
        rows_[r].emplace_back(c, v % p);
      }
    }
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      auto& row = rows_[r];
      std::sort(row.begin(), row.end());
      // Merge duplicate coordinates.
      std::size_t w = 0;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (w > 0 && row[w - 1].first == row[i].first) {
          row[w - 1].second = (row[w - 1].second + row[i].second) % p_;
          if (row[w - 1].second == 0) --w;
        } else {
          row[w++] = row[i];
        }
      }
      row.resize(w);
      for (const auto& e : row) {
        col_rows_[e.first].push_back(r);
        ++col_count_[e.first];
      }
    }
    row_alive_.assign(rows_.size(), true);
  }

  std::size_t run() {
    std::size_t rank = 0;
    std::vector<std::uint32_t> live_cols;
    for (std::uint32_t c = 0; c < col_count_.size(); ++c) {
      if (col_count_[c] > 0) live_cols.push_back(c);
    }
    while (true) {
      std::size_t w = 0;
      std::uint32_t best = 0;
      std::uint32_t best_count = std::numeric_limits<std::uint32_t>::max();
      for (std::uint32_t c : live_cols) {
        if (col_count_[c] == 0) continue;
        live_cols[w++] = c;
        if (col_count_[c] < best_count) {
          best_count = col_count_[c];
          best = c;
        }
      }
      live_cols.resize(w);
      if (live_cols.empty()) break;
      pivot_on(best);
      ++rank;
    }
    return rank;
  }

  ModpElimination result() const { return record_; }

 private:
  const std::uint32_t* find(std::uint32_t r, std::uint32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const auto& e, std::uint32_t x) { return e.first < x; });
    if (it != row.end() && it->first == c) return &it->second;
    return nullptr;
  }

  void pivot_on(std::uint32_t c) {
    // Live rows with an entry in c.
    std::vector<std::uint32_t> hits;
    for (std::uint32_t r : col_rows_[c]) {
      if (row_alive_[r] && find(r, c) != nullptr &&
          std::find(hits.begin(), hits.end(), r) == hits.end()) {
        hits.push_back(r);
      }
    }
    std::uint32_t pr = hits.front();
    for (std::uint32_t r : hits) {
      if (rows_[r].size() < rows_[pr].size()) pr = r;
    }
    record_.pivot_rows.push_back(pr);
    record_.pivot_cols.push_back(c);
    record_.pivot_values.push_back(*find(pr, c));
    const std::uint64_t inv = inv_mod(*find(pr, c), p_);
    for (std::uint32_t r : hits) {
      if (r == pr) continue;
      const std::uint64_t f = *find(r, c) * inv % p_;
      axpy(r, pr, f);
    }
    for (const auto& e : rows_[pr]) --col_count_[e.first];
    rows_[pr].clear();
    row_alive_[pr] = false;
    col_rows_[c].clear();
  }

  // row_r -= f * row_s
  void axpy(std::uint32_t r, std::uint32_t s, std::uint64_t f) {
    const Row& src = rows_[s];
    Row& dst = rows_[r];
    Row out;
    out.reserve(dst.size() + src.size());
    std::size_t a = 0, b = 0;
    const std::uint64_t nf = (p_ - f) % p_;
    while (a < dst.size() || b < src.size()) {
      if (b == src.size() ||
          (a < dst.size() && dst[a].first < src[b].first)) {
        out.push_back(dst[a++]);
      } else if (a == dst.size() || src[b].first < dst[a].first) {
        const auto v = static_cast<std::uint32_t>(nf * src[b].second % p_);
        out.emplace_back(src[b].first, v);
        col_rows_[src[b].first].push_back(r);
        ++col_count_[src[b].first];
        ++b;
      } else {
        const auto v = static_cast<std::uint32_t>(
            (dst[a].second + nf * src[b].second) % p_);
        if (v != 0) {
          out.emplace_back(dst[a].first, v);
        } else {
          --col_count_[dst[a].first];
        }
        ++a;
        ++b;
      }
    }
    dst = std::move(out);
  }

  std::uint32_t p_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_count_;
  std::vector<bool> row_alive_;
  ModpElimination record_;
};

}  // namespace

ModpElimination eliminate_mod_p(std::size_t rows,
                                const std::vector<ModColumn>& cols,
                                std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("eliminate_mod_p: bad modulus");
  ModpEliminator e(rows, cols, p);
  ModpElimination out;
  const std::size_t rank = e.run();
  out = e.result();
  out.rank = rank;
  return out;
}

std::uint32_t det_mod_p(std::size_t n, const std::vector<ModColumn>& cols,
                        std::uint32_t p) {
  if (cols.size() != n) throw std::invalid_argument("det_mod_p: not square");
  const ModpElimination e = eliminate_mod_p(n, cols, p);
  if (e.rank < n) return 0;
  // Sign of the permutation sending each pivot row to its pivot column.
  std::vector<std::uint32_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[e.pivot_rows[k]] = e.pivot_cols[k];
  std::vector<bool> seen(n, false);
  bool odd = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) odd = !odd;
  }
  std::uint64_t det = 1;
  for (auto v : e.pivot_values) det = det * v % p;
  if (odd && det != 0) det = p - det;
  return static_cast<std::uint32_t>(det);
}

std::size_t rank_mod_p(std::size_t rows, const std::vector<ModColumn>& cols,
                       std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be prime");
  ModpEliminator e(rows, cols, p);
  return e.run();
}

}  // namespace torsion
