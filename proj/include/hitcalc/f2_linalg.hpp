#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hitcalc {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed bit vector over GF(2). Bit i lives in word i / 64.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}
  BitRow(std::size_t bits, std::span<const std::size_t> set_positions);

  std::size_t size() const { return bits_; }
  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool is_zero() const;
  std::size_t popcount() const;
  /// Highest set bit, or nullopt for the zero row.
  std::optional<std::size_t> highest_bit() const;
  /// Set positions in ascending order.
  std::vector<std::size_t> set_bits() const;

  BitRow& operator^=(const BitRow& other);
  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

/// Dense row-major bit matrix with a fixed word stride.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t columns) : cols_(columns), stride_(words_for(columns)) {}

  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return cols_; }
  std::size_t stride() const { return stride_; }

  std::span<Word> row(std::size_t i) { return {data_.data() + i * stride_, stride_}; }
  std::span<const Word> row(std::size_t i) const { return {data_.data() + i * stride_, stride_}; }

  /// Appends a zero row and returns it.
  std::span<Word> append_zero_row();
  void append_row(std::span<const Word> words);
  void append_row(const BitRow& r) { append_row(r.words()); }
  void reserve_rows(std::size_t n) { data_.reserve(n * stride_); }
  void clear() {
    data_.clear();
    rows_ = 0;
  }

  std::size_t bytes() const { return data_.capacity() * sizeof(Word); }

 private:
  friend class EchelonSpan;
  std::size_t cols_;
  std::size_t stride_;
  std::size_t rows_ = 0;
  std::vector<Word> data_;
};

/// A subspace of GF(2)^columns held in fully reduced row-echelon form.
/// Each row's pivot is its highest set bit, and a pivot bit is clear in
/// every other row. Rows are ordered by strictly decreasing pivot.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t columns);

  std::size_t columns() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot(std::size_t column) const { return lookup_[column] >= 0; }
  /// Row index holding `column` as its pivot, if any.
  std::optional<std::size_t> pivot_row(std::size_t column) const;
  std::size_t pivot_of_row(std::size_t i) const { return pivots_[i]; }
  std::span<const Word> row(std::size_t i) const { return rows_.row(i); }
  BitRow row_copy(std::size_t i) const;

  /// Adds one generator. Returns true iff the rank grew.
  bool insert(const BitRow& row);

  /// Adds a batch of generators at once; the batch is consumed. Returns
  /// the rank increase. `threads` > 1 splits row updates across threads
  /// without changing the result.
  std::size_t insert_batch(BitMatrix&& batch, unsigned threads = 1);

  /// Residual of `row` modulo the span: zero iff row is a member.
  BitRow reduce(const BitRow& row) const;
  void reduce_in_place(std::span<Word> row) const;
  bool contains(const BitRow& row) const { return reduce(row).is_zero(); }

  /// dim(span ∩ <e_c : c in columns>).
  std::size_t intersect_dim(std::span<const std::size_t> columns) const;

  /// Basis of { v : <v, r> = 0 for every row r } read as the solution
  /// space of the homogeneous system whose equations are the rows.
  std::vector<BitRow> nullspace() const;

  /// Checks pivot uniqueness, full reduction and ordering.
  bool well_formed() const;

  std::size_t bytes() const { return rows_.bytes() + lookup_.capacity() * sizeof(std::int32_t); }

 private:
  void rebuild_lookup();
  void sort_rows();

  std::size_t cols_;
  BitMatrix rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::int32_t> lookup_;
  BitRow pivot_mask_;
};

/// Rank of the row set, via a scratch EchelonSpan.
std::size_t rank_of(const std::vector<BitRow>& rows);

}  // namespace hitcalc
