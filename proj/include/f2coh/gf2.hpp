#pragma once

// Dense linear algebra over F2 with rows packed into 64-bit words.
// Padding bits past the last column are always zero.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "f2coh/error.hpp"

namespace f2coh::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

inline void xor_words(std::span<Word> dst, std::span<const Word> src,
                      std::size_t from = 0) {
  for (std::size_t i = from; i < dst.size(); ++i) dst[i] ^= src[i];
}

/// Index of the lowest set bit at or after `from`, or `size` if none.
inline std::size_t next_set_bit(std::span<const Word> words, std::size_t size,
                                std::size_t from = 0) {
  std::size_t w = from / kWordBits;
  if (w >= words.size()) return size;
  Word cur = words[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur) {
      const std::size_t bit = w * kWordBits + std::countr_zero(cur);
      return bit < size ? bit : size;
    }
    if (++w >= words.size()) return size;
    cur = words[w];
  }
}

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size)) {}

  std::size_t size() const noexcept { return size_; }
  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t first_set() const { return next_set_bit(words_, size_); }

  BitVector& operator^=(const BitVector& other) {
    if (other.size_ != size_) throw DimensionError("bit vector length mismatch");
    xor_words(words_, other.words_);
    return *this;
  }

  bool operator==(const BitVector&) const = default;

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i] == '1') v.set(i);
    return v;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), bits_(rows * stride_) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  std::span<Word> row(std::size_t r) { return {bits_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const {
    return {bits_.data() + r * stride_, stride_};
  }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    Word& w = bits_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) {
    bits_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  void append_row(const BitVector& v) {
    if (v.size() != cols_) throw DimensionError("row length mismatch");
    bits_.insert(bits_.end(), v.words().begin(), v.words().end());
    ++rows_;
  }
  void append_row(std::span<const Word> words) {
    if (words.size() != stride_) throw DimensionError("row length mismatch");
    bits_.insert(bits_.end(), words.begin(), words.end());
    ++rows_;
  }

  BitVector row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy(row(r).begin(), row(r).end(), v.words().begin());
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
  }

  void truncate_rows(std::size_t n) {
    rows_ = std::min(rows_, n);
    bits_.resize(rows_ * stride_);
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      auto words = row(r);
      for (std::size_t c = next_set_bit(words, cols_); c < cols_;
           c = next_set_bit(words, cols_, c + 1))
        t.set(c, r);
    }
    return t;
  }

  /// m·x for a column vector x of length cols().
  BitVector apply(const BitVector& x) const {
    if (x.size() != cols_) throw DimensionError("vector length mismatch");
    BitVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Word acc = 0;
      auto words = row(r);
      for (std::size_t w = 0; w < stride_; ++w) acc ^= words[w] & x.words()[w];
      if (std::popcount(acc) & 1) y.set(r);
    }
    return y;
  }

  bool operator==(const BitMatrix&) const = default;

  /// Debug dump: one row per line of '0'/'1' characters.
  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
      s += '\n';
    }
    return s;
  }

  static BitMatrix from_strings(const std::vector<std::string>& lines) {
    const std::size_t cols = lines.empty() ? 0 : lines.front().size();
    BitMatrix m(lines.size(), cols);
    for (std::size_t r = 0; r < lines.size(); ++r) {
      if (lines[r].size() != cols) throw DimensionError("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c)
        if (lines[r][c] == '1') m.set(r, c);
    }
    return m;
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
};

/// Reduced row-echelon basis of a row space. Pivot of a row is its first set
/// column; every pivot column is zero in all other rows.
struct EchelonBasis {
  BitMatrix matrix;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
  std::size_t cols() const noexcept { return matrix.cols(); }

  /// Clears every pivot column of v by adding basis rows. Returns the rows
  /// used; when v ends at zero those rows sum to the original v.
  std::vector<std::size_t> reduce(BitVector& v) const {
    if (v.size() != cols()) throw DimensionError("vector length mismatch");
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (v.test(pivots[i])) {
        xor_words(v.words(), matrix.row(i), pivots[i] / kWordBits);
        used.push_back(i);
      }
    }
    return used;
  }
};

inline EchelonBasis rref(BitMatrix m) {
  EchelonBasis out;
  std::size_t rank = 0;
  const std::size_t rows = m.rows();
  for (std::size_t c = 0; c < m.cols() && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && !m.get(pivot, c)) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(pivot, rank);
    const std::size_t from = c / kWordBits;
    auto prow = m.row(rank);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && m.get(r, c)) xor_words(m.row(r), prow, from);
    out.pivots.push_back(c);
    ++rank;
  }
  m.truncate_rows(rank);
  out.matrix = std::move(m);
  return out;
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).rank(); }

/// Basis of {x : m·x = 0}.
inline EchelonBasis kernel(const BitMatrix& m) {
  const EchelonBasis e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  BitMatrix basis(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector x(n);
    x.set(f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (e.matrix.get(i, f)) x.set(e.pivots[i]);
    basis.append_row(x);
  }
  EchelonBasis k = rref(std::move(basis));
  if (k.rank() + e.rank() != n)
    throw Error("rank-nullity violated in kernel computation");
  return k;
}

/// Basis of {c : c·m = 0}, the kernel of the map whose images are m's rows.
inline EchelonBasis left_kernel(const BitMatrix& m) { return kernel(m.transpose()); }

struct Membership {
  bool member = false;
  std::vector<std::size_t> coordinates;  // basis rows summing to v
};

inline Membership member(const BitVector& v, const EchelonBasis& basis) {
  if (v.size() != basis.cols()) throw DimensionError("vector length mismatch");
  BitVector work = v;
  auto used = basis.reduce(work);
  if (work.any()) return {};
  return {true, std::move(used)};
}

inline bool same_row_space(const EchelonBasis& a, const EchelonBasis& b) {
  return a.pivots == b.pivots && a.matrix == b.matrix;
}

/// Incrementally built echelon basis with distinct pivots (not back-reduced).
/// Insertion only clears the leading bit, which keeps sparse rows sparse;
/// full reduction still yields a unique representative per coset.
class SemiEchelon {
 public:
  explicit SemiEchelon(std::size_t cols = 0)
      : cols_(cols), rows_(0, cols), pivot_row_(cols, kNone) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.rows(); }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] != kNone; }

  /// Adds v to the span. Returns false if it was already there.
  bool insert(BitVector v) {
    if (v.size() != cols_) throw DimensionError("vector length mismatch");
    std::size_t lead = v.first_set();
    while (lead < cols_ && pivot_row_[lead] != kNone) {
      xor_words(v.words(), rows_.row(pivot_row_[lead]), lead / kWordBits);
      lead = next_set_bit(v.words(), cols_, lead);
    }
    if (lead == cols_) return false;
    pivot_row_[lead] = rows_.rows();
    rows_.append_row(v);
    return true;
  }

  /// Zeroes every pivot column of v.
  void reduce(BitVector& v) const {
    if (v.size() != cols_) throw DimensionError("vector length mismatch");
    for (std::size_t c = v.first_set(); c < cols_;
         c = next_set_bit(v.words(), cols_, c + 1)) {
      if (pivot_row_[c] != kNone)
        xor_words(v.words(), rows_.row(pivot_row_[c]), c / kWordBits);
    }
  }

  EchelonBasis to_rref() const { return rref(rows_); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t cols_;
  BitMatrix rows_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace f2coh::gf2
