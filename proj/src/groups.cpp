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

#include "torsion/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace torsion {
namespace {

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log of non-positive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

BigInt pollard_brent(const BigInt& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  BigInt y = seed % 1000 + 2, c = seed % 97 + 1, g = 1, q = 1, x, ys, t;
  const unsigned long m = 128;
  unsigned long r = 1;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = (y * y + c) % n;
        t = abs(x - y);
        q = (q * t) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
    if (r > (1ul << 26)) return 0;  // give up
  }
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      t = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++out[n];
    return;
  }
  for (unsigned long seed = 1; seed < 64; ++seed) {
    const BigInt g = pollard_brent(n, seed * 7919);
    if (g != 0 && g != 1 && g != n) {
      factor_into(g, out);
      factor_into(n / g, out);
      return;
    }
  }
  throw std::domain_error("factorize: could not split " + n.get_str());
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factorize: need n >= 1");
  std::map<BigInt, unsigned> found;
  BigInt rest = n;
  for (unsigned long p = 2; p < 100000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (p * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++found[BigInt(p)];
      rest /= p;
    }
  }
  factor_into(rest, found);
  return {found.begin(), found.end()};
}

AbelianGroup::AbelianGroup(std::vector<BigInt> cyclic_orders) {
  std::vector<BigInt> rest;
  for (auto& d : cyclic_orders) {
    if (d < 1) throw std::invalid_argument("cyclic orders must be positive");
    if (d > 1) rest.push_back(std::move(d));
  }
  BigInt g, l;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      if (mpz_divisible_p(rest[j].get_mpz_t(), rest[i].get_mpz_t())) continue;
      mpz_gcd(g.get_mpz_t(), rest[i].get_mpz_t(), rest[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), rest[i].get_mpz_t(), rest[j].get_mpz_t());
      rest[i] = g;
      rest[j] = l;
    }
  }
  std::sort(rest.begin(), rest.end());
  for (auto& d : rest) {
    if (d > 1) factors_.push_back(std::move(d));
  }
}

AbelianGroup AbelianGroup::cyclic(const BigInt& order) {
  return AbelianGroup(std::vector<BigInt>{order});
}

BigInt AbelianGroup::order() const {
  BigInt n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

double AbelianGroup::log_order() const {
  double s = 0;
  for (const auto& d : factors_) s += log_big(d);
  return s;
}

std::string AbelianGroup::literal() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + factors_[i].get_str();
  }
  return s;
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (ch != ' ') t += ch;
  }
  if (t == "1") return AbelianGroup();
  std::vector<BigInt> orders;
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t.compare(pos, 2, "Z/") != 0) {
      throw std::invalid_argument("bad group literal: " + text);
    }
    pos += 2;
    std::size_t end = pos;
    while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) {
      ++end;
    }
    if (end == pos) throw std::invalid_argument("bad group literal: " + text);
    BigInt d(t.substr(pos, end - pos));
    if (d < 2) throw std::invalid_argument("bad group literal: " + text);
    orders.push_back(d);
    pos = end;
    if (pos < t.size()) {
      if (t[pos] != 'x') throw std::invalid_argument("bad group literal: " + text);
      ++pos;
    }
  }
  if (orders.empty()) throw std::invalid_argument("bad group literal: " + text);
  AbelianGroup g(orders);
  if (g.factors_ != orders) {
    throw std::invalid_argument("group literal not in invariant-factor form: " +
                                text);
  }
  return g;
}

std::strong_ordering operator<=>(const AbelianGroup& a, const AbelianGroup& b) {
  const int c = cmp(a.order(), b.order());
  if (c != 0) return c < 0 ? std::strong_ordering::less
                           : std::strong_ordering::greater;
  if (a.factors_.size() != b.factors_.size()) {
    return a.factors_.size() <=> b.factors_.size();
  }
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    const int ci = cmp(a.factors_[i], b.factors_[i]);
    if (ci != 0) return ci < 0 ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

PGroup::PGroup(std::uint64_t q, std::vector<int> partition)
    : q_(q), partition_(std::move(partition)) {
  if (q < 2 || mpz_probab_prime_p(BigInt(static_cast<unsigned long>(q)).get_mpz_t(), 30) == 0) {
    throw std::invalid_argument("PGroup: q must be prime");
  }
  for (std::size_t i = 0; i < partition_.size(); ++i) {
    if (partition_[i] < 1 || (i > 0 && partition_[i] > partition_[i - 1])) {
      throw std::invalid_argument(
          "PGroup: partition must be weakly decreasing and positive");
    }
  }
}

int PGroup::size() const {
  int s = 0;
  for (int x : partition_) s += x;
  return s;
}

BigInt PGroup::order() const {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), q_, size());
  return r;
}

AbelianGroup PGroup::to_abelian() const {
  std::vector<BigInt> orders;
  for (int e : partition_) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), q_, e);
    orders.push_back(r);
  }
  return AbelianGroup(orders);
}

std::strong_ordering operator<=>(const PGroup& a, const PGroup& b) {
  if (a.q_ != b.q_) return a.q_ <=> b.q_;
  if (a.size() != b.size()) return a.size() <=> b.size();
  // Within one size: reverse lexicographic, so (1,1) precedes (2).
  return b.partition_ <=> a.partition_;
}

PGroup sylow(const AbelianGroup& g, std::uint64_t q) {
  std::vector<int> part;
  BigInt rest;
  const BigInt qq = static_cast<unsigned long>(q);
  for (const auto& d : g.invariant_factors()) {
    const auto v = mpz_remove(rest.get_mpz_t(), d.get_mpz_t(), qq.get_mpz_t());
    if (v > 0) part.push_back(static_cast<int>(v));
  }
  std::sort(part.rbegin(), part.rend());
  return PGroup(q, std::move(part));
}

std::vector<PGroup> primary_parts(const AbelianGroup& g) {
  std::vector<PGroup> out;
  if (g.trivial()) return out;
  for (const auto& [p, e] : factorize(g.invariant_factors().back())) {
    if (!p.fits_ulong_p()) {
      throw std::domain_error("primary_parts: prime exceeds 64 bits");
    }
    out.push_back(sylow(g, p.get_ui()));
  }
  return out;
}

BigInt aut_order(const PGroup& h) {
  // Exponents ascending e_1 <= ... <= e_k.
  std::vector<int> e(h.partition().rbegin(), h.partition().rend());
  const int k = static_cast<int>(e.size());
  const unsigned long q = h.q();
  auto qpow = [q](long x) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(x));
    return r;
  };
  BigInt result = 1;
  for (int j = 0; j < k; ++j) {
    // 1-based d_j = max{l : e_l = e_j}, c_j = min{l : e_l = e_j}.
    int dj = j, cj = j;
    while (dj + 1 < k && e[dj + 1] == e[j]) ++dj;
    while (cj > 0 && e[cj - 1] == e[j]) --cj;
    const long d1 = dj + 1, c1 = cj + 1, j1 = j + 1;
    result *= qpow(d1) - qpow(j1 - 1);
    result *= qpow(static_cast<long>(e[j]) * (k - d1));
    result *= qpow(static_cast<long>(e[j] - 1) * (k - c1 + 1));
  }
  return result;
}

BigInt aut_order(const AbelianGroup& g) {
  BigInt r = 1;
  for (const auto& h : primary_parts(g)) r *= aut_order(h);
  return r;
}

double log_aut_order(const AbelianGroup& g) {
  return log_big(aut_order(g));
}

std::vector<std::vector<int>> partitions_of(int s) {
  if (s < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Recursive generation with parts bounded by the previous part.
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, s, s);
  return out;
}

}  // namespace torsion
