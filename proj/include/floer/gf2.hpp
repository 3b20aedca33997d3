#pragma once

// Dense linear algebra over the field with two elements.
//
// Vectors and matrices are bit-packed into 64-bit words. Matrices are stored
// row-major; subspaces are always passed around as the column span of a
// BitMatrix. Zero-row and zero-column matrices are ordinary values.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "floer/errors.hpp"

namespace floer::gf2 {

namespace detail {
inline constexpr std::size_t kWordBits = 64;
inline std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}
}  // namespace detail

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size)
      : size_(size), words_(detail::words_for(size), 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index, true);
    return v;
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const {
    return (words_[i / detail::kWordBits] >> (i % detail::kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i % detail::kWordBits);
    if (value) {
      words_[i / detail::kWordBits] |= mask;
    } else {
      words_[i / detail::kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) {
    words_[i / detail::kWordBits] ^= std::uint64_t{1} << (i % detail::kWordBits);
  }

  BitVector& operator^=(const BitVector& other) {
    if (other.size_ != size_) {
      throw DimensionMismatch("vector sizes differ in xor");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  bool is_zero() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  std::size_t popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  // Index of the lowest set bit, or size() when the vector is zero.
  std::size_t lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * detail::kWordBits +
               static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return size_;
  }
  bool dot(const BitVector& other) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  // Matrix literal: one string per row over {'0','1'}. `cols` is needed to
  // give a shape to matrices with no rows.
  static BitMatrix from_rows(std::span<const std::string> rows,
                             std::optional<std::size_t> cols = std::nullopt) {
    const std::size_t c = cols ? *cols : (rows.empty() ? 0 : rows.front().size());
    BitMatrix m(rows.size(), c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != c) {
        throw ParseError("matrix row " + std::to_string(r) + " has length " +
                         std::to_string(rows[r].size()) + ", expected " +
                         std::to_string(c));
      }
      for (std::size_t j = 0; j < c; ++j) {
        const char ch = rows[r][j];
        if (ch != '0' && ch != '1') {
          throw ParseError(std::string("matrix entry '") + ch + "' is not 0 or 1");
        }
        if (ch == '1') m.set(r, j, true);
      }
    }
    return m;
  }
  static BitMatrix from_rows(std::initializer_list<std::string> rows) {
    std::vector<std::string> v(rows);
    return from_rows(std::span<const std::string>(v));
  }

  // Matrix whose columns are the given vectors (all of length `ambient`).
  static BitMatrix from_columns(std::span<const BitVector> columns,
                                std::size_t ambient) {
    BitMatrix m(ambient, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != ambient) {
        throw DimensionMismatch("column length differs from ambient dimension");
      }
      m.set_column(c, columns[c]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector& row(std::size_t r) { return data_[r]; }

  BitVector column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (get(r, c)) v.set(r, true);
    }
    return v;
  }
  std::vector<BitVector> columns() const {
    std::vector<BitVector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
  }
  void set_column(std::size_t c, const BitVector& v) {
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (get(r, c)) t.set(c, r, true);
      }
    }
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const BitVector& v) { return v.is_zero(); });
  }

  BitVector operator*(const BitVector& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    BitVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (data_[r].dot(x)) y.set(r, true);
    }
    return y;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    BitMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      const BitVector& ar = a.data_[r];
      BitVector& acc = out.data_[r];
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (ar.get(k)) acc ^= b.data_[k];
      }
    }
    return out;
  }

  BitMatrix& operator+=(const BitMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw DimensionMismatch("matrix sum shape mismatch");
    }
    for (std::size_t r = 0; r < rows_; ++r) data_[r] ^= other.data_[r];
    return *this;
  }
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }

  // [a | b]
  static BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_) throw DimensionMismatch("hstack row counts differ");
    BitMatrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t c = 0; c < a.cols_; ++c) {
        if (a.get(r, c)) out.set(r, c, true);
      }
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (b.get(r, c)) out.set(r, a.cols_ + c, true);
      }
    }
    return out;
  }
  // [a ; b]
  static BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("vstack column counts differ");
    BitMatrix out(a.rows_ + b.rows_, a.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) out.data_[r] = a.data_[r];
    for (std::size_t r = 0; r < b.rows_; ++r) out.data_[a.rows_ + r] = b.data_[r];
    return out;
  }

  // Copies `block` into this matrix with its top-left corner at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const BitMatrix& block) {
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) {
      throw DimensionMismatch("block does not fit");
    }
    for (std::size_t r = 0; r < block.rows_; ++r) {
      for (std::size_t c = 0; c < block.cols_; ++c) {
        set(r0 + r, c0 + c, block.get(r, c));
      }
    }
  }
  BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                  std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    BitMatrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t c = 0; c < nc; ++c) out.set(r, c, get(r0 + r, c0 + c));
    }
    return out;
  }
  BitMatrix select_rows(std::span<const std::size_t> idx) const {
    BitMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) out.data_[i] = data_[idx[i]];
    return out;
  }
  BitMatrix select_columns(std::span<const std::size_t> idx) const {
    BitMatrix out(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (get(r, idx[i])) out.set(r, i, true);
      }
    }
    return out;
  }

  std::vector<std::string> to_rows() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (const auto& r : data_) out.push_back(r.to_string());
    return out;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

// Reduced row echelon form together with its pivot columns.
struct Echelon {
  BitMatrix reduced;
  std::vector<std::size_t> pivots;
};

inline Echelon rref(BitMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
    std::size_t pivot = next;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(m.row(pivot), m.row(next));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != next && m.get(r, c)) m.row(r) ^= m.row(next);
    }
    pivots.push_back(c);
    ++next;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const BitMatrix& m) {
  // Eliminate along the shorter side.
  return m.rows() <= m.cols() ? rref(m).pivots.size()
                              : rref(m.transpose()).pivots.size();
}

// Columns form a basis of ker m; built from the free columns of rref(m), so
// the choice is deterministic.
inline BitMatrix kernel_basis(const BitMatrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  BitMatrix basis(m.cols(), m.cols() - pivots.size());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(free, out, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (r.get(i, free)) basis.set(pivots[i], out, true);
    }
    ++out;
  }
  return basis;
}

// The pivot columns of m: a basis of its column space, in original order.
inline BitMatrix image_basis(const BitMatrix& m) {
  const auto ech = rref(m);
  return m.select_columns(ech.pivots);
}

// dim(span(big) + span(small)) - dim(span(small)). When span(small) lies in
// span(big) this is the dimension of the quotient span(big)/span(small).
inline std::size_t quotient_dim(const BitMatrix& big, const BitMatrix& small) {
  if (big.rows() != small.rows()) {
    throw DimensionMismatch("quotient_dim: ambient dimensions " +
                            std::to_string(big.rows()) + " and " +
                            std::to_string(small.rows()) + " differ");
  }
  return rank(BitMatrix::hstack(big, small)) - rank(small);
}

inline std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows()) {
    throw DimensionMismatch("solve: right-hand side has length " +
                            std::to_string(b.size()) + ", matrix has " +
                            std::to_string(m.rows()) + " rows");
  }
  BitMatrix aug(m.rows(), m.cols() + 1);
  aug.place(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug.set(r, m.cols(), b.get(r));
  const auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  BitVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (red.get(i, m.cols())) x.set(pivots[i], true);
  }
  return x;
}

// Solves m X = B column by column; absent if any column is unsolvable.
inline std::optional<BitMatrix> solve(const BitMatrix& m, const BitMatrix& rhs) {
  if (rhs.rows() != m.rows()) throw DimensionMismatch("solve: row counts differ");
  BitMatrix aug = BitMatrix::hstack(m, rhs);
  const auto [red, pivots] = rref(std::move(aug));
  for (auto p : pivots) {
    if (p >= m.cols()) return std::nullopt;
  }
  BitMatrix x(m.cols(), rhs.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      if (red.get(i, m.cols() + c)) x.set(pivots[i], c, true);
    }
  }
  return x;
}

inline std::optional<BitMatrix> inverse(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, BitMatrix::identity(m.rows()));
}

// Columns of `vectors` that extend span(base) one at a time, scanned left to
// right. Together with base they span span(base) + span(vectors).
inline BitMatrix extend_basis(const BitMatrix& base, const BitMatrix& vectors) {
  const auto ech = rref(BitMatrix::hstack(base, vectors));
  std::vector<std::size_t> picked;
  for (auto p : ech.pivots) {
    if (p >= base.cols()) picked.push_back(p - base.cols());
  }
  return vectors.select_columns(picked);
}

inline bool in_span(const BitMatrix& span, const BitVector& v) {
  return solve(span, v).has_value();
}

}  // namespace floer::gf2
