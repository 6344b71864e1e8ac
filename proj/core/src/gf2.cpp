#include "homcode/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace homcode {

BitVec& BitVec::operator^=(const BitVec& o) {
  assert(n_ == o.n_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

bool BitVec::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::size_t(std::popcount(w));
  return c;
}

std::size_t BitVec::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + std::size_t(std::countr_zero(words_[w]));
  return n_;
}

bool BitVec::dot(const BitVec& o) const {
  assert(n_ == o.n_);
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
  return std::popcount(acc) & 1;
}

bool BitVec::operator<(const BitVec& o) const {
  assert(n_ == o.n_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] == o.words_[w]) continue;
    // Bit i lives at machine bit (i & 63) of word i >> 6, so the lowest
    // differing machine bit is the first differing index; with 0 < 1 the
    // vector holding 0 there is the smaller one.
    std::uint64_t diff = words_[w] ^ o.words_[w];
    std::uint64_t low = diff & ~(diff - 1);
    return (words_[w] & low) == 0;
  }
  return false;
}

void Gf2Matrix::append_row(BitVec r) {
  assert(r.size() == cols_ || rows_.empty());
  if (rows_.empty()) cols_ = r.size();
  rows_.push_back(std::move(r));
}

Gf2Rref Gf2Matrix::rref() const {
  Gf2Matrix work = *this;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < work.rows_.size(); ++c) {
    std::size_t pivot = work.rows_.size();
    for (std::size_t i = r; i < work.rows_.size(); ++i) {
      if (work.rows_[i].get(c)) {
        pivot = i;
        break;
      }
    }
    if (pivot == work.rows_.size()) continue;
    std::swap(work.rows_[r], work.rows_[pivot]);
    for (std::size_t i = 0; i < work.rows_.size(); ++i) {
      if (i != r && work.rows_[i].get(c)) work.rows_[i] ^= work.rows_[r];
    }
    pivots.push_back(c);
    ++r;
  }
  Gf2Rref out;
  out.mat = Gf2Matrix(0, cols_);
  for (std::size_t i = 0; i < r; ++i) out.mat.append_row(work.rows_[i]);
  out.pivots = std::move(pivots);
  return out;
}

std::size_t Gf2Matrix::rank() const { return rref().pivots.size(); }

std::vector<BitVec> Gf2Matrix::kernel_basis() const {
  Gf2Rref rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    BitVec v(cols_);
    v.set(free, true);
    // Back-substitute: pivot variable of row i equals the value of the
    // free columns appearing in that row.
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      if (rr.mat.row(i).get(free)) v.set(rr.pivots[i], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool Gf2Matrix::in_row_space(const BitVec& v) const {
  Gf2Eliminator elim(cols_);
  for (const auto& r : rows_) elim.add(r);
  return elim.contains(v);
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix out(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (rows_[r].get(c)) out.set(c, r, true);
  return out;
}

BitVec Gf2Matrix::multiply(const BitVec& x) const {
  assert(x.size() == cols_);
  BitVec out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].dot(x)) out.set(r, true);
  return out;
}

bool Gf2Eliminator::add(BitVec v) {
  assert(v.size() == cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  if (!v.any()) return false;
  std::size_t p = v.first_set();
  // Keep rows sorted by pivot so reduction stays a single forward pass.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + long(pos), std::move(v));
  pivots_.insert(pivots_.begin() + long(pos), p);
  return true;
}

bool Gf2Eliminator::contains(BitVec v) const {
  assert(v.size() == cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  return !v.any();
}

}  // namespace homcode
