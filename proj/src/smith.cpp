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

// Smith normal form by pivoted elimination.
//
// Pivot rule: the nonzero entry of least absolute value; among those, the one
// with least Markowitz cost (row_len - 1) * (col_len - 1), then the smallest
// column, then the smallest row. A pivot that divides its whole row and column
// is eliminated and its row and column are deleted; otherwise one row (or
// column) is reduced by the remainder step, which strictly lowers the least
// absolute value. Once the live submatrix is more than half full it is moved
// to a dense array and the same rule continues there.
//
// If an entry outgrows SmithOptions::blowup_limbs, the remaining live block S
// is finished modulo D, the absolute value of a nonzero maximal minor of the
// input. Every invariant factor of the input divides D, so coker S and coker [S | D I]
// have the same invariant factors in the first rank(S) positions, and the
// latter can be computed over Z/D with entries bounded by D.

#include "torsion/smith.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "torsion/modular.hpp"

namespace torsion {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  if (rows > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("SparseIntMatrix: too many rows");
  }
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const BigInt& v) {
  if (r >= rows_ || c >= cols_.size()) {
    throw std::out_of_range("SparseIntMatrix::add index out of range");
  }
  if (v == 0) return;
  auto& col = cols_[c];
  const auto row = static_cast<std::uint32_t>(r);
  auto it = std::lower_bound(
      col.begin(), col.end(), row,
      [](const auto& e, std::uint32_t x) { return e.first < x; });
  if (it != col.end() && it->first == row) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, {row, v});
  }
}

BigInt SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = cols_.at(c);
  auto it = std::lower_bound(
      col.begin(), col.end(), static_cast<std::uint32_t>(r),
      [](const auto& e, std::uint32_t x) { return e.first < x; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

void SparseIntMatrix::append_column(Column col) {
  std::sort(col.begin(), col.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Column clean;
  clean.reserve(col.size());
  for (auto& e : col) {
    if (e.first >= rows_) throw std::out_of_range("append_column: bad row");
    if (!clean.empty() && clean.back().first == e.first) {
      clean.back().second += e.second;
      if (clean.back().second == 0) clean.pop_back();
    } else if (e.second != 0) {
      clean.push_back(std::move(e));
    }
  }
  cols_.push_back(std::move(clean));
}

std::vector<MatrixEntry> SparseIntMatrix::triples() const {
  std::vector<MatrixEntry> out;
  out.reserve(nonzeros());
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    for (const auto& [r, v] : cols_[c]) out.push_back({r, c, v});
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  SparseIntMatrix t(cols_.size(), rows_);
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    for (const auto& [r, v] : cols_[c]) {
      t.cols_[r].emplace_back(static_cast<std::uint32_t>(c), v);
    }
  }
  return t;
}

std::string SparseIntMatrix::to_text() const {
  std::ostringstream out;
  out << rows_ << ' ' << cols_.size() << ' ' << nonzeros() << '\n';
  for (const auto& e : triples()) {
    out << e.row << ' ' << e.col << ' ' << e.value.get_str() << '\n';
  }
  return out.str();
}

SparseIntMatrix SparseIntMatrix::from_text(const std::string& text) {
  std::istringstream in(text);
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(in >> rows >> cols >> nnz)) {
    throw std::invalid_argument("matrix text: bad header");
  }
  SparseIntMatrix m(rows, cols);
  for (std::size_t i = 0; i < nnz; ++i) {
    std::size_t r = 0, c = 0;
    std::string v;
    if (!(in >> r >> c >> v)) {
      throw std::invalid_argument("matrix text: truncated entry list");
    }
    m.add(r, c, BigInt(v));
  }
  return m;
}

bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

std::vector<BigInt> SmithForm::torsion() const {
  std::vector<BigInt> out;
  for (const auto& d : invariants) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

namespace {

// Turns a list of nonzero diagonal entries into a divisibility chain.
std::vector<BigInt> normalize_diagonal(std::vector<BigInt> diag) {
  std::size_t units = 0;
  std::vector<BigInt> rest;
  for (auto& d : diag) {
    d = abs(d);
    if (d == 1) {
      ++units;
    } else {
      rest.push_back(std::move(d));
    }
  }
  // (a, b) -> (gcd, lcm) sweeps leave rest[i] dividing every later entry.
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
  std::vector<BigInt> out(units, BigInt(1));
  for (auto& d : rest) {
    if (d == 1) {
      out.insert(out.begin(), BigInt(1));
    } else {
      out.push_back(std::move(d));
    }
  }
  return out;
}

// Symmetric reduction modulo D when active.
struct Modulus {
  BigInt d;
  BigInt half;
  bool active = false;
  std::size_t limbs = 4;

  bool too_big(const BigInt& x) const {
    return !active && mpz_size(x.get_mpz_t()) > limbs;
  }

  static Modulus of(const BigInt& d) {
    Modulus m;
    m.d = abs(d);
    m.half = m.d / 2;
    m.active = true;
    return m;
  }
  void reduce(BigInt& x) const {
    if (!active) return;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    if (x > half) x -= d;
  }
  // A unit u modulo d with u * a = gcd(a, d) (mod d).
  BigInt unit_to_gcd(const BigInt& a, BigInt& g) const {
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    const BigInt a1 = a / g;
    const BigInt d1 = d / g;
    BigInt u;
    if (d1 == 1) {
      u = 1;
    } else {
      mpz_invert(u.get_mpz_t(), a1.get_mpz_t(), d1.get_mpz_t());
    }
    // Lift u to a unit modulo d by stepping through u + k d1.
    BigInt t;
    while (true) {
      mpz_gcd(t.get_mpz_t(), u.get_mpz_t(), d.get_mpz_t());
      if (t == 1) return u;
      u += d1;
    }
  }
};

void reduction_quotient(BigInt& t, const BigInt& b, const BigInt& a) {
  mpz_fdiv_q(t.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
}

enum class Status { kDone, kBlowup };

class DenseSmith {
 public:
  DenseSmith(std::size_t rows, std::size_t cols, const Modulus& mod)
      : rows_(rows), cols_(cols), a_(rows * cols), mod_(mod) {
    live_rows_.resize(rows);
    live_cols_.resize(cols);
    for (std::size_t i = 0; i < rows; ++i) live_rows_[i] = i;
    for (std::size_t j = 0; j < cols; ++j) live_cols_[j] = j;
  }

  BigInt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  Status run(std::vector<BigInt>& diagonal) {
    BigInt t, g;
    while (true) {
      if (blowup_) return Status::kBlowup;
      std::size_t pr = 0, pc = 0;
      if (!select(pr, pc)) return Status::kDone;
      if (mod_.active && mpz_cmpabs_ui(at(pr, pc).get_mpz_t(), 1) != 0) {
        const BigInt u = mod_.unit_to_gcd(at(pr, pc), g);
        if (u != 1) {
          for (std::size_t i : live_rows_) {
            if (at(i, pc) == 0) continue;
            at(i, pc) *= u;
            mod_.reduce(at(i, pc));
          }
        }
      }
      const BigInt a = at(pr, pc);
      bool reduced = false;
      for (std::size_t i : live_rows_) {
        if (i == pr || at(i, pc) == 0) continue;
        if (!mpz_divisible_p(at(i, pc).get_mpz_t(), a.get_mpz_t())) {
          reduction_quotient(t, at(i, pc), a);
          row_submul(i, pr, t);
          reduced = true;
          break;
        }
      }
      if (reduced) continue;
      for (std::size_t j : live_cols_) {
        if (j == pc || at(pr, j) == 0) continue;
        if (!mpz_divisible_p(at(pr, j).get_mpz_t(), a.get_mpz_t())) {
          reduction_quotient(t, at(pr, j), a);
          col_submul(j, pc, t);
          reduced = true;
          break;
        }
      }
      if (reduced) continue;
      for (std::size_t i : live_rows_) {
        if (i == pr || at(i, pc) == 0) continue;
        mpz_divexact(t.get_mpz_t(), at(i, pc).get_mpz_t(), a.get_mpz_t());
        row_submul(i, pr, t);
      }
      diagonal.push_back(a);
      live_rows_.erase(std::find(live_rows_.begin(), live_rows_.end(), pr));
      live_cols_.erase(std::find(live_cols_.begin(), live_cols_.end(), pc));
    }
  }

  SparseIntMatrix live_block() {
    SparseIntMatrix m(live_rows_.size(), live_cols_.size());
    for (std::size_t jj = 0; jj < live_cols_.size(); ++jj) {
      for (std::size_t ii = 0; ii < live_rows_.size(); ++ii) {
        const BigInt& v = at(live_rows_[ii], live_cols_[jj]);
        if (v != 0) m.add(ii, jj, v);
      }
    }
    return m;
  }

 private:
  // Least |a|, ties: smallest column then row.
  bool select(std::size_t& pr, std::size_t& pc) {
    const BigInt* best = nullptr;
    for (std::size_t j : live_cols_) {
      for (std::size_t i : live_rows_) {
        const BigInt& v = at(i, j);
        if (v == 0) continue;
        if (best == nullptr ||
            mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0) {
          best = &v;
          pr = i;
          pc = j;
          if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0) return true;
        }
      }
    }
    return best != nullptr;
  }

  void row_submul(std::size_t i, std::size_t p, const BigInt& t) {
    for (std::size_t j : live_cols_) {
      const BigInt& src = at(p, j);
      if (src == 0) continue;
      BigInt& dst = at(i, j);
      mpz_submul(dst.get_mpz_t(), t.get_mpz_t(), src.get_mpz_t());
      mod_.reduce(dst);
      if (mod_.too_big(dst)) blowup_ = true;
    }
  }
  void col_submul(std::size_t j, std::size_t q, const BigInt& t) {
    for (std::size_t i : live_rows_) {
      const BigInt& src = at(i, q);
      if (src == 0) continue;
      BigInt& dst = at(i, j);
      mpz_submul(dst.get_mpz_t(), t.get_mpz_t(), src.get_mpz_t());
      mod_.reduce(dst);
      if (mod_.too_big(dst)) blowup_ = true;
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> a_;
  std::vector<std::size_t> live_rows_;
  std::vector<std::size_t> live_cols_;
  Modulus mod_;
  bool blowup_ = false;
};

class SparseSmith {
 public:
  struct Entry {
    std::uint32_t col;
    BigInt val;
  };
  using Row = std::vector<Entry>;

  SparseSmith(const SparseIntMatrix& m, const Modulus& mod)
      : rows_(m.rows()),
        col_rows_(m.cols()),
        col_count_(m.cols(), 0),
        row_alive_(m.rows(), false),
        col_alive_(m.cols(), false),
        mark_(m.rows(), 0),
        mod_(mod) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (const auto& [r, v] : m.column(c)) {
        BigInt x = v;
        mod_.reduce(x);
        if (x == 0) continue;
        rows_[r].push_back({static_cast<std::uint32_t>(c), std::move(x)});
        col_rows_[c].push_back(r);
        ++col_count_[c];
        ++nnz_;
      }
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!rows_[r].empty()) {
        row_alive_[r] = true;
        ++live_rows_;
      }
    }
    for (std::size_t c = 0; c < col_count_.size(); ++c) {
      if (col_count_[c] > 0) {
        col_alive_[c] = true;
        ++live_cols_;
      }
    }
  }

  Status run(std::vector<BigInt>& diagonal) {
    BigInt t, g;
    while (nnz_ > 0) {
      if (blowup_) return Status::kBlowup;
      if (should_densify()) return densify_and_finish(diagonal);
      auto [pr, pc] = select_pivot();
      if (mod_.active && mpz_cmpabs_ui(find(pr, pc)->get_mpz_t(), 1) != 0) {
        const BigInt u = mod_.unit_to_gcd(*find(pr, pc), g);
        if (u != 1) scale_col(pc, u);
      }
      const BigInt a = *find(pr, pc);
      if (try_reduce_column(pr, pc, a, t)) continue;
      if (try_reduce_row(pr, pc, a, t)) continue;
      for (std::uint32_t i : rows_in_col(pc)) {
        if (i == pr) continue;
        const BigInt* b = find(i, pc);
        mpz_divexact(t.get_mpz_t(), b->get_mpz_t(), a.get_mpz_t());
        row_submul(i, pr, t);
      }
      diagonal.push_back(a);
      drop_row(pr);
      drop_col(pc);
    }
    return blowup_ ? Status::kBlowup : Status::kDone;
  }

  // The live rows and columns as a compact matrix.
  SparseIntMatrix live_block() {
    if (dense_) return dense_->live_block();
    std::vector<std::uint32_t> cmap(col_count_.size(), 0);
    std::size_t cols = 0;
    for (std::uint32_t c = 0; c < col_count_.size(); ++c) {
      if (col_alive_[c]) cmap[c] = static_cast<std::uint32_t>(cols++);
    }
    std::size_t rows = 0;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) rows += row_alive_[r];
    SparseIntMatrix m(rows, cols);
    std::size_t i = 0;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (!row_alive_[r]) continue;
      for (const auto& e : rows_[r]) m.add(i, cmap[e.col], e.val);
      ++i;
    }
    return m;
  }

 private:
  bool should_densify() const {
    const double cells = static_cast<double>(live_rows_) * live_cols_;
    return live_rows_ > 8 && live_cols_ > 8 && nnz_ > 0.5 * cells &&
           cells < 2.5e7;
  }

  std::pair<std::uint32_t, std::uint32_t> select_pivot() const {
    std::uint32_t br = 0, bc = 0;
    const BigInt* best = nullptr;
    std::uint64_t best_cost = 0;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (!row_alive_[r]) continue;
      const std::uint64_t rlen = rows_[r].size() - 1;
      for (const auto& e : rows_[r]) {
        const std::uint64_t cost = rlen * (col_count_[e.col] - 1);
        bool better = false;
        if (best == nullptr) {
          better = true;
        } else {
          const int cmp = mpz_cmpabs(e.val.get_mpz_t(), best->get_mpz_t());
          if (cmp < 0) {
            better = true;
          } else if (cmp == 0) {
            better = cost < best_cost ||
                     (cost == best_cost &&
                      (e.col < bc || (e.col == bc && r < br)));
          }
        }
        if (better) {
          best = &e.val;
          best_cost = cost;
          br = r;
          bc = e.col;
        }
      }
    }
    return {br, bc};
  }

  const BigInt* find(std::uint32_t r, std::uint32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const Entry& e, std::uint32_t x) { return e.col < x; });
    if (it != row.end() && it->col == c) return &it->val;
    return nullptr;
  }
  BigInt* find(std::uint32_t r, std::uint32_t c) {
    return const_cast<BigInt*>(std::as_const(*this).find(r, c));
  }

  // Live rows holding an entry in column c; also compacts the index list.
  std::vector<std::uint32_t> rows_in_col(std::uint32_t c) {
    auto& list = col_rows_[c];
    ++stamp_;
    std::vector<std::uint32_t> out;
    std::size_t w = 0;
    for (std::uint32_t r : list) {
      if (!row_alive_[r] || mark_[r] == stamp_) continue;
      mark_[r] = stamp_;
      if (find(r, c) == nullptr) continue;
      list[w++] = r;
      out.push_back(r);
    }
    list.resize(w);
    return out;
  }

  void scale_col(std::uint32_t c, const BigInt& u) {
    for (std::uint32_t i : rows_in_col(c)) {
      BigInt* v = find(i, c);
      *v *= u;
      mod_.reduce(*v);
      // u is a unit mod D, so the entry stays nonzero.
    }
  }

  bool try_reduce_column(std::uint32_t pr, std::uint32_t pc, const BigInt& a,
                         BigInt& t) {
    if (mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0) return false;
    for (std::uint32_t i : rows_in_col(pc)) {
      if (i == pr) continue;
      const BigInt* b = find(i, pc);
      if (!mpz_divisible_p(b->get_mpz_t(), a.get_mpz_t())) {
        reduction_quotient(t, *b, a);
        row_submul(i, pr, t);
        return true;
      }
    }
    return false;
  }

  bool try_reduce_row(std::uint32_t pr, std::uint32_t pc, const BigInt& a,
                      BigInt& t) {
    if (mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0) return false;
    for (const auto& e : rows_[pr]) {
      if (e.col == pc) continue;
      if (!mpz_divisible_p(e.val.get_mpz_t(), a.get_mpz_t())) {
        reduction_quotient(t, e.val, a);
        col_submul(e.col, pc, t);
        return true;
      }
    }
    return false;
  }

  // row_i -= t * row_p
  void row_submul(std::uint32_t i, std::uint32_t p, const BigInt& t) {
    const Row& src = rows_[p];
    Row& dst = rows_[i];
    Row out;
    out.reserve(dst.size() + src.size());
    std::size_t a = 0, b = 0;
    const std::size_t before = dst.size();
    while (a < dst.size() || b < src.size()) {
      if (b == src.size() || (a < dst.size() && dst[a].col < src[b].col)) {
        out.push_back(std::move(dst[a++]));
        continue;
      }
      Entry e;
      bool fresh = false;
      if (a == dst.size() || src[b].col < dst[a].col) {
        e.col = src[b].col;
        fresh = true;
      } else {
        e.col = dst[a].col;
        e.val = std::move(dst[a].val);
        ++a;
      }
      mpz_submul(e.val.get_mpz_t(), t.get_mpz_t(), src[b].val.get_mpz_t());
      mod_.reduce(e.val);
      ++b;
      if (e.val != 0) {
        if (mod_.too_big(e.val)) blowup_ = true;
        if (fresh) {
          col_rows_[e.col].push_back(i);
          ++col_count_[e.col];
        }
        out.push_back(std::move(e));
      } else if (!fresh) {
        dec_col(e.col);
      }
    }
    nnz_ = nnz_ + out.size() - before;
    dst = std::move(out);
    if (dst.empty()) kill_row(i);
  }

  // col_j -= t * col_q, touching only rows that hold an entry in column q.
  void col_submul(std::uint32_t j, std::uint32_t q, const BigInt& t) {
    for (std::uint32_t i : rows_in_col(q)) {
      const BigInt src = *find(i, q);
      Row& row = rows_[i];
      auto it = std::lower_bound(
          row.begin(), row.end(), j,
          [](const Entry& e, std::uint32_t x) { return e.col < x; });
      if (it != row.end() && it->col == j) {
        mpz_submul(it->val.get_mpz_t(), t.get_mpz_t(), src.get_mpz_t());
        mod_.reduce(it->val);
        if (it->val == 0) {
          row.erase(it);
          dec_col(j);
          --nnz_;
          if (row.empty()) kill_row(i);
        } else if (mod_.too_big(it->val)) {
          blowup_ = true;
        }
      } else {
        Entry e{j, BigInt()};
        mpz_mul(e.val.get_mpz_t(), t.get_mpz_t(), src.get_mpz_t());
        mpz_neg(e.val.get_mpz_t(), e.val.get_mpz_t());
        mod_.reduce(e.val);
        if (e.val == 0) continue;
        if (mod_.too_big(e.val)) blowup_ = true;
        row.insert(it, std::move(e));
        col_rows_[j].push_back(i);
        ++col_count_[j];
        ++nnz_;
      }
    }
  }

  void dec_col(std::uint32_t c) {
    if (--col_count_[c] == 0 && col_alive_[c]) {
      col_alive_[c] = false;
      --live_cols_;
    }
  }

  void kill_row(std::uint32_t r) {
    if (row_alive_[r]) {
      row_alive_[r] = false;
      --live_rows_;
    }
  }

  void drop_row(std::uint32_t r) {
    for (const auto& e : rows_[r]) dec_col(e.col);
    nnz_ -= rows_[r].size();
    rows_[r].clear();
    kill_row(r);
  }

  // After elimination, column c holds nothing outside the dropped row.
  void drop_col(std::uint32_t c) {
    if (col_alive_[c]) {
      col_alive_[c] = false;
      --live_cols_;
    }
    col_rows_[c].clear();
  }

  Status densify_and_finish(std::vector<BigInt>& diagonal) {
    std::vector<std::uint32_t> rmap, cmap(col_count_.size(), 0);
    std::size_t cols = 0;
    for (std::uint32_t c = 0; c < col_count_.size(); ++c) {
      if (col_alive_[c]) cmap[c] = static_cast<std::uint32_t>(cols++);
    }
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (row_alive_[r]) rmap.push_back(r);
    }
    dense_.emplace(rmap.size(), cols, mod_);
    for (std::size_t i = 0; i < rmap.size(); ++i) {
      for (auto& e : rows_[rmap[i]]) dense_->at(i, cmap[e.col]) = std::move(e.val);
      rows_[rmap[i]].clear();
    }
    return dense_->run(diagonal);
  }

  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_count_;
  std::vector<bool> row_alive_;
  std::vector<bool> col_alive_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::size_t nnz_ = 0;
  std::size_t live_rows_ = 0;
  std::size_t live_cols_ = 0;
  Modulus mod_;
  bool blowup_ = false;
  std::optional<DenseSmith> dense_;
};

constexpr std::uint32_t kRankPrimes[] = {2147483647u, 2147483629u,
                                         2147483587u};

// A maximal set of independent rows and columns, found modulo the prime
// (of three) that gives the largest rank.
ModpElimination independent_minor(const SparseIntMatrix& m) {
  ModpElimination best;
  for (std::uint32_t p : kRankPrimes) {
    ModpElimination e = eliminate_mod_p(m.rows(), reduce_mod_p(m, p), p);
    if (e.rank > best.rank || best.pivot_rows.empty()) best = std::move(e);
  }
  return best;
}

// |det| of the minor on the given rows and columns, by CRT over word primes
// up to the Hadamard bound.
BigInt minor_determinant(const SparseIntMatrix& m,
                         const ModpElimination& minor) {
  const std::size_t r = minor.rank;
  std::vector<std::uint32_t> row_index(m.rows(), UINT32_MAX);
  for (std::size_t k = 0; k < r; ++k) row_index[minor.pivot_rows[k]] = k;
  SparseIntMatrix sub(r, 0);
  double log2_bound = 1;
  for (std::size_t k = 0; k < r; ++k) {
    SparseIntMatrix::Column col;
    double norm2 = 0;
    for (const auto& [row, v] : m.column(minor.pivot_cols[k])) {
      if (row_index[row] == UINT32_MAX) continue;
      col.emplace_back(row_index[row], v);
      norm2 += v.get_d() * v.get_d();
    }
    log2_bound += 0.5 * std::log2(norm2);
    sub.append_column(std::move(col));
  }
  BigInt residue = 0, modulus = 1, t;
  std::uint32_t p = 2147483647u;
  while (static_cast<double>(mpz_sizeinbase(modulus.get_mpz_t(), 2)) <
         log2_bound + 2) {
    while (!is_prime(p)) --p;
    const std::uint32_t dp = det_mod_p(r, reduce_mod_p(sub, p), p);
    // residue += modulus * ((dp - residue) * modulus^{-1} mod p)
    const std::uint64_t rm = mpz_fdiv_ui(residue.get_mpz_t(), p);
    const std::uint64_t mm = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    const std::uint64_t k =
        mul_mod((dp + p - rm) % p, inv_mod(mm, p), p);
    residue += modulus * static_cast<unsigned long>(k);
    modulus *= static_cast<unsigned long>(p);
    --p;
  }
  if (residue > modulus / 2) residue -= modulus;
  return abs(residue);
}

}  // namespace

SmithForm smith_normal_form(const SparseIntMatrix& m) {
  return smith_normal_form(m, SmithOptions{});
}

SmithForm smith_normal_form(const SparseIntMatrix& m,
                            const SmithOptions& options) {
  std::vector<BigInt> diag;
  Modulus plain;
  plain.limbs = options.blowup_limbs;
  SparseSmith fast(m, plain);
  if (fast.run(diag) == Status::kDone) {
    return SmithForm{normalize_diagonal(std::move(diag))};
  }
  const SparseIntMatrix rest = fast.live_block();
  const ModpElimination minor = independent_minor(m);
  const BigInt d = minor_determinant(m, minor);
  if (d == 0) throw std::logic_error("smith_normal_form: singular minor");
  const Modulus mod = Modulus::of(d);
  std::vector<BigInt> tail;
  SparseSmith slow(rest, mod);
  if (slow.run(tail) != Status::kDone) {
    throw std::logic_error("smith_normal_form: growth under a modulus");
  }
  std::vector<BigInt> chain;
  for (const auto& a : tail) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), mod.d.get_mpz_t());
    chain.push_back(g);
  }
  chain.resize(rest.rows(), mod.d);
  chain = normalize_diagonal(std::move(chain));
  const std::size_t rest_rank = minor.rank - diag.size();
  chain.resize(rest_rank);
  diag.insert(diag.end(), chain.begin(), chain.end());
  return SmithForm{normalize_diagonal(std::move(diag))};
}

}  // namespace torsion
