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

#include "torsion/qtrees.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Core>

#include "torsion/errors.hpp"
#include "torsion/homology.hpp"
#include "torsion/modular.hpp"
#include "torsion/seeding.hpp"
#include "torsion/smith.hpp"

namespace torsion {
namespace {

constexpr std::uint64_t kPrimeLo = std::uint64_t{1} << 30;
constexpr std::uint64_t kPrimeHi = std::uint64_t{1} << 31;

std::size_t tree_size(int n) { return binomial(n - 1, 2); }

// Row of edge {a, b}, 1 <= a < b, among the edges avoiding vertex 0.
std::size_t reduced_row(int a, int b) {
  return static_cast<std::size_t>(a - 1) + binomial(b - 1, 2);
}

// Boundary of a triangle restricted to edges avoiding vertex 0.
int reduced_column(FaceRank face, int n,
                   std::array<std::pair<std::size_t, int>, 3>& out) {
  const Simplex s = face_unrank(face, n, 2);
  int k = 0;
  out[k++] = {reduced_row(s[1], s[2]), 1};
  if (s[0] != 0) {
    out[k++] = {reduced_row(s[0], s[2]), -1};
    out[k++] = {reduced_row(s[0], s[1]), 1};
  }
  return k;
}

void edges_of(FaceRank face, std::array<FaceRank, 3>& out) {
  facet_ranks(face, 2, out);
}

bool sorted_distinct(const std::vector<FaceRank>& faces, int n) {
  const auto total = binomial(n, 3);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i] >= total) return false;
    if (i > 0 && faces[i] <= faces[i - 1]) return false;
  }
  return true;
}

std::vector<FaceRank> normalized(std::vector<FaceRank> faces) {
  std::sort(faces.begin(), faces.end());
  return faces;
}

// Fraction-free Gaussian elimination (Bareiss) on a small square matrix.
std::int64_t bareiss(std::vector<std::int64_t> a, std::size_t n) {
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[r * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] =
            (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

// Residues modulo p < 2^23 held in doubles. Sums of up to 64 products of
// residues stay below 2^52 and are therefore exact.
struct DoubleModulus {
  double p;
  double pinv;
  explicit DoubleModulus(std::uint32_t q) : p(q), pinv(1.0 / q) {}
  // x in [0, 2^52) to [0, p).
  double reduce(double x) const {
    double r = x - std::floor(x * pinv) * p;
    if (r < 0) r += p;
    if (r >= p) r -= p;
    return r;
  }
  double sub(double a, double b) const {
    const double r = a - b;
    return r < 0 ? r + p : r;
  }
};

}  // namespace

TwoTree initial_tree(int n) {
  if (n < 4) throw std::invalid_argument("initial_tree requires n >= 4");
  TwoTree t;
  t.n = n;
  for (int b = 2; b < n; ++b) {
    for (int a = 1; a < b; ++a) t.faces.push_back(face_rank(Simplex{0, a, b}));
  }
  std::sort(t.faces.begin(), t.faces.end());
  return t;
}

bool is_qacyclic(const std::vector<FaceRank>& faces_in, int n,
                 std::mt19937_64& rng) {
  if (n < 3 || n > kMaxVertexCount) return false;
  const auto faces = normalized(faces_in);
  if (faces.size() != tree_size(n) || !sorted_distinct(faces, n)) return false;
  const ComplexState state(n, 2, faces);
  const SparseIntMatrix m = boundary_matrix(state, 2);
  for (int attempt = 0; attempt < 3; ++attempt) {
    const auto p = static_cast<std::uint32_t>(random_prime(rng, kPrimeLo, kPrimeHi));
    if (rank_mod_p(m, p) == faces.size()) return true;
  }
  return smith_normal_form(m).rank() == faces.size();
}

bool is_qacyclic(const std::vector<FaceRank>& faces, int n) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  return is_qacyclic(faces, n, rng);
}

std::int64_t reduced_determinant(const std::vector<FaceRank>& faces_in,
                                 int n) {
  if (n < 3 || n > 8) {
    throw std::invalid_argument("reduced_determinant requires 3 <= n <= 8");
  }
  const auto faces = normalized(faces_in);
  const std::size_t dim = tree_size(n);
  if (faces.size() != dim || !sorted_distinct(faces, n)) return 0;
  std::vector<std::int64_t> a(dim * dim, 0);
  std::array<std::pair<std::size_t, int>, 3> col;
  for (std::size_t j = 0; j < dim; ++j) {
    const int k = reduced_column(faces[j], n, col);
    for (int i = 0; i < k; ++i) a[col[i].first * dim + j] = col[i].second;
  }
  return bareiss(std::move(a), dim);
}

bool degrees_consecutive(const std::vector<int>& degrees) {
  if (degrees.empty()) return true;
  std::vector<int> d = degrees;
  std::sort(d.begin(), d.end());
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] > d[i - 1] + 1) return false;
  }
  return true;
}

ChainState::ChainState(TwoTree tree, std::uint64_t seed)
    : tree_(std::move(tree)),
      rng_(seed),
      prime_rng_(splitmix64(seed ^ 0x5851f42d4c957f2dULL)) {
  tree_.faces = normalized(tree_.faces);
  slots_ = tree_.faces;
  present_.assign(binomial(tree_.n, 3), false);
  for (auto f : slots_) present_[f] = true;
  degrees_ = face_degrees(tree_.state(), 1);
  hist_.assign(tree_.n, 0);
  for (int v : degrees_) ++hist_[v];
}

bool ChainState::degrees_consistent() const {
  return degrees_ == face_degrees(tree_.state(), 1);
}

ChainState::Proposal ChainState::propose() {
  std::uniform_int_distribution<std::size_t> slot(0, slots_.size() - 1);
  std::uniform_int_distribution<FaceRank> face(0, present_.size() - 1);
  Proposal p;
  p.slot = slot(rng_);
  do {
    p.face = face(rng_);
  } while (present_[p.face]);
  return p;
}

void ChainState::apply(const Proposal& p) {
  const FaceRank old = slots_[p.slot];
  std::array<FaceRank, 3> e{};
  edges_of(old, e);
  for (auto r : e) {
    --hist_[degrees_[r]];
    ++hist_[--degrees_[r]];
  }
  edges_of(p.face, e);
  for (auto r : e) {
    --hist_[degrees_[r]];
    ++hist_[++degrees_[r]];
  }
  present_[old] = false;
  present_[p.face] = true;
  slots_[p.slot] = p.face;
  auto& f = tree_.faces;
  f.erase(std::lower_bound(f.begin(), f.end(), old));
  f.insert(std::lower_bound(f.begin(), f.end(), p.face), p.face);
  ++step_;
}

bool chain_step(ChainState& state) {
  const auto p = state.propose();
  std::vector<FaceRank> next = state.slots();
  next[p.slot] = p.face;
  if (is_qacyclic(next, state.tree().n, state.prime_rng())) {
    state.apply(p);
    return true;
  }
  state.hold();
  return false;
}

bool t0_reached(const ChainState& s) {
  const auto& h = s.histogram();
  std::size_t lo = 0;
  while (lo < h.size() && h[lo] == 0) ++lo;
  std::size_t hi = h.size();
  while (hi > lo && h[hi - 1] == 0) --hi;
  for (std::size_t k = lo; k < hi; ++k) {
    if (h[k] == 0) return false;
  }
  return true;
}

FastChain::FastChain(int n, std::uint64_t seed)
    : n_(n),
      dim_(tree_size(n)),
      stride_((tree_size(n) + 7) / 8 * 8),
      p_(0),
      state_(initial_tree(n), seed) {
  p_ = static_cast<std::uint32_t>(random_prime(
      state_.prime_rng(), std::uint64_t{1} << 22, std::uint64_t{1} << 23));
  // The cone's reduced boundary is the identity in slot order.
  inv_.assign(dim_ * stride_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) inv_[i * stride_ + i] = 1.0;
  etas_a_.assign(kBatch * stride_, 0.0);
  etas_b_.assign(kBatch * stride_, 0.0);
}

std::size_t FastChain::row_of_edge(int a, int b) const {
  return reduced_row(a, b);
}

// The current inverse is inv_ - sum_t a_t b_t^T over the pending etas.
bool FastChain::step() {
  const auto prop = state_.propose();
  std::array<std::pair<std::size_t, int>, 3> col;
  const int k = reduced_column(prop.face, n_, col);
  const std::size_t j = prop.slot;
  const DoubleModulus mod(p_);
  auto dot_v = [&](const double* row) {
    double s = 0;
    for (int c = 0; c < k; ++c) {
      const double v = row[col[c].first];
      s += col[c].second > 0 ? v : (v == 0 ? 0 : mod.p - v);
    }
    return mod.reduce(s);
  };
  // s_t = b_t . v
  std::array<double, kBatch> s{};
  for (std::size_t t = 0; t < pending_; ++t) {
    s[t] = dot_v(&etas_b_[t * stride_]);
  }
  double acc_j = 0;
  for (std::size_t t = 0; t < pending_; ++t) {
    acc_j += etas_a_[t * stride_ + j] * s[t];
  }
  const double xj = mod.sub(dot_v(&inv_[j * stride_]), mod.reduce(acc_j));
  if (xj == 0) {
    state_.hold();
    return false;
  }
  const double xj_inv =
      static_cast<double>(inv_mod(static_cast<std::uint64_t>(xj), p_));
  // x = inv * v, then a = (x - e_j) / x_j.
  double* a = &etas_a_[pending_ * stride_];
  double* b = &etas_b_[pending_ * stride_];
  std::fill(a, a + stride_, 0.0);
  for (std::size_t t = 0; t < pending_; ++t) {
    const double st = s[t];
    const double* at = &etas_a_[t * stride_];
    for (std::size_t i = 0; i < dim_; ++i) a[i] += st * at[i];
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    double xi = mod.sub(dot_v(&inv_[i * stride_]), mod.reduce(a[i]));
    if (i == j) xi = mod.sub(xi, 1.0);
    a[i] = mod.reduce(xi * xj_inv);
  }
  // b = row j of the current inverse.
  std::fill(b, b + stride_, 0.0);
  for (std::size_t t = 0; t < pending_; ++t) {
    const double f = etas_a_[t * stride_ + j];
    if (f == 0) continue;
    const double* bt = &etas_b_[t * stride_];
    for (std::size_t c = 0; c < dim_; ++c) b[c] += f * bt[c];
  }
  const double* inv_j = &inv_[j * stride_];
  for (std::size_t c = 0; c < dim_; ++c) {
    b[c] = mod.sub(inv_j[c], mod.reduce(b[c]));
  }
  if (++pending_ == kBatch) flush();
  state_.apply(prop);
  ++accepted_;
  return true;
}

void FastChain::flush() {
  // inv -= A^T B with A, B the pending a_t, b_t as rows. Every partial sum is
  // an integer below 2^53 in absolute value, so the product is exact.
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>;
  const auto rows = static_cast<Eigen::Index>(dim_);
  const auto cols = static_cast<Eigen::Index>(stride_);
  const auto k = static_cast<Eigen::Index>(pending_);
  Eigen::Map<RowMajor> inv(inv_.data(), rows, cols);
  Eigen::Map<const RowMajor> a(etas_a_.data(), k, cols);
  Eigen::Map<const RowMajor> b(etas_b_.data(), k, cols);
  inv.noalias() -= a.leftCols(rows).transpose() * b;
  const double p = p_;
  const double pinv = 1.0 / p;
  for (double& v : inv_) {
    double r = v - std::floor(v * pinv) * p;
    r = r < 0 ? r + p : r;
    v = r >= p ? r - p : r;
  }
  pending_ = 0;
}

bool FastChain::t0_reached() const { return torsion::t0_reached(state_); }

TwoTree FastChain::tree() const { return state_.tree(); }

TreeSample sample_tree(int n, std::uint64_t seed, std::uint64_t cap) {
  if (n < 5) throw std::invalid_argument("sample_tree requires n >= 5");
  FastChain chain(n, seed);
  while (!chain.t0_reached()) {
    if (chain.steps() >= cap) {
      throw MixingTimeout("t0 not reached within " + std::to_string(cap) +
                          " steps at n=" + std::to_string(n));
    }
    chain.step();
  }
  TreeSample out;
  out.t0 = chain.steps();
  while (chain.steps() < 2 * out.t0) chain.step();
  out.tree = chain.tree();
  out.steps = chain.steps();
  out.accepted = chain.accepted();
  return out;
}

namespace {

std::vector<TwoTree> enumerate_uncached(int n) {
  const std::size_t dim = tree_size(n);
  const auto total = static_cast<std::size_t>(binomial(n, 3));
  std::vector<std::array<std::pair<std::size_t, int>, 3>> cols(total);
  std::vector<int> lens(total);
  for (std::size_t f = 0; f < total; ++f) lens[f] = reduced_column(f, n, cols[f]);
  std::vector<TwoTree> out;
  std::vector<std::size_t> pick(dim);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<std::int64_t> a(dim * dim);
  while (true) {
    std::fill(a.begin(), a.end(), 0);
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& col = cols[pick[j]];
      for (int i = 0; i < lens[pick[j]]; ++i) {
        a[col[i].first * dim + j] = col[i].second;
      }
    }
    if (bareiss(a, dim) != 0) {
      TwoTree t;
      t.n = n;
      t.faces.assign(pick.begin(), pick.end());
      out.push_back(std::move(t));
    }
    // Next combination in lexicographic order.
    std::size_t i = dim;
    while (i > 0 && pick[i - 1] == total - dim + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < dim; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<TwoTree> enumerate_qacyclic(
    int n, const std::optional<std::filesystem::path>& cache_dir) {
  if (n < 3 || n > 6) {
    throw std::invalid_argument(
        "enumerate_qacyclic is limited to 3 <= n <= 6");
  }
  std::filesystem::path file;
  if (cache_dir) {
    file = *cache_dir / ("qacyclic_n" + std::to_string(n) + ".faces");
    std::ifstream in(file);
    if (in) {
      std::string header;
      std::getline(in, header);
      std::size_t count = 0;
      if (std::sscanf(header.c_str(), "# n=%*d count=%zu", &count) == 1) {
        std::vector<TwoTree> out;
        out.reserve(count);
        while (out.size() < count) {
          const auto faces = read_faces(in);
          if (faces.empty()) break;
          TwoTree t;
          t.n = n;
          for (const auto& s : faces) t.faces.push_back(face_rank(s, n));
          t.faces = normalized(std::move(t.faces));
          out.push_back(std::move(t));
        }
        if (out.size() == count) return out;
      }
    }
  }
  auto out = enumerate_uncached(n);
  if (cache_dir) {
    std::filesystem::create_directories(*cache_dir);
    const auto tmp = file.string() + ".tmp";
    {
      std::ofstream o(tmp);
      o << "# n=" << n << " count=" << out.size() << '\n';
      for (const auto& t : out) {
        const auto s = t.state().simplices();
        write_faces(o, s);
        o << '\n';
      }
    }
    std::filesystem::rename(tmp, file);
  }
  return out;
}

KalaiSum kalai_sum(int n,
                   const std::optional<std::filesystem::path>& cache_dir) {
  const auto trees = enumerate_qacyclic(n, cache_dir);
  KalaiSum k;
  k.complexes = trees.size();
  k.sum = 0;
  for (const auto& t : trees) {
    const HomologySummary h = integer_homology(t.state(), 1);
    if (h.betti != 0) {
      throw std::logic_error("kalai_sum: enumerated complex has infinite H_1");
    }
    const BigInt order = h.torsion.order();
    k.sum += order * order;
    ++k.h1_counts[h.torsion];
  }
  mpz_ui_pow_ui(k.expected.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(binomial(n - 2, 2)));
  return k;
}

}  // namespace torsion
