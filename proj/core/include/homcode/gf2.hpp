#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace homcode {

// Dense bit vector over GF(2), packed 64 bits per word.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  bool any() const;
  std::size_t popcount() const;
  // Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const;
  // GF(2) inner product: parity of the AND of the two vectors.
  bool dot(const BitVec& o) const;

  bool operator==(const BitVec& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }
  // Lexicographic by bit index 0..n-1 (bit 0 most significant); gives a
  // total order usable for canonical choices.
  bool operator<(const BitVec& o) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Gf2Rref;

// Row-major matrix over GF(2) built on BitVec rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVec(cols)) {}

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }

  BitVec& row(std::size_t i) { return rows_[i]; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

  void append_row(BitVec r);

  std::size_t rank() const;

  // Reduced row echelon form together with the pivot column of each
  // nonzero row, in row order.
  Gf2Rref rref() const;

  // Basis of the right kernel {x : M x = 0}, deterministic: one vector per
  // free column, in increasing column order.
  std::vector<BitVec> kernel_basis() const;

  // Whether v lies in the row space.
  bool in_row_space(const BitVec& v) const;

  Gf2Matrix transposed() const;

  // M * x for a column vector x of length col_count().
  BitVec multiply(const BitVec& x) const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

struct Gf2Rref {
  Gf2Matrix mat;                    // nonzero rows only, fully reduced
  std::vector<std::size_t> pivots;  // pivot column per row of `mat`
};

// Incremental row-space tracker: feed vectors, learn which ones were
// independent of everything fed before.
class Gf2Eliminator {
 public:
  explicit Gf2Eliminator(std::size_t cols) : cols_(cols) {}

  // Reduces v against the rows collected so far; if a nonzero residue
  // remains it is stored and the call returns true (v was independent).
  bool add(BitVec v);
  bool contains(BitVec v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }

 private:
  std::size_t cols_;
  std::vector<BitVec> rows_;           // echelon rows, by increasing pivot
  std::vector<std::size_t> pivots_;    // pivot column of each row
};

}  // namespace homcode
