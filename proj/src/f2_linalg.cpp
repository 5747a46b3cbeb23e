#include "hitcalc/f2_linalg.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hitcalc {

namespace {

inline bool bit_at(const Word* row, std::size_t c) { return (row[c / kWordBits] >> (c % kWordBits)) & 1u; }

inline void xor_words(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t w = 0; w < n; ++w) dst[w] ^= src[w];
}

template <typename Fn>
void parallel_ranges(std::size_t begin, std::size_t end, unsigned threads, Fn&& fn) {
  std::size_t count = end - begin;
  if (threads <= 1 || count < 2048) {
    fn(begin, end);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned k = 0; k < threads; ++k) {
    std::size_t lo = begin + k * chunk;
    std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

constexpr std::size_t kWindow = 8;

// Four-Russians elimination over the rows of `data`. Rows [0, fixed) are
// already a reduced echelon set whose pivots are excluded from
// `candidates`; rows [fixed, rows) are free and must have no bits in the
// fixed pivot columns. `candidates` lists the remaining columns in
// decreasing order. On return rows [0, result.size() + fixed) form a
// reduced echelon set and the returned vector gives the pivot columns of
// the new rows [fixed, fixed + k). Zero rows are discarded (rows shrinks).
std::vector<std::uint32_t> four_russians(std::vector<Word>& data, std::size_t stride, std::size_t& rows,
                                         std::size_t fixed, const std::vector<std::uint32_t>& candidates,
                                         unsigned threads) {
  std::vector<std::uint32_t> new_pivots;
  std::size_t r = fixed;
  std::vector<std::uint8_t> local, scratch, applied;
  std::vector<Word> table;
  std::vector<Word> swap_buf(stride);
  std::vector<std::size_t> zero_rows;

  auto row_ptr = [&](std::size_t i) { return data.data() + i * stride; };
  auto swap_rows = [&](std::size_t a, std::size_t b, std::size_t wl) {
    if (a == b) return;
    Word* pa = row_ptr(a);
    Word* pb = row_ptr(b);
    std::memcpy(swap_buf.data(), pa, wl * sizeof(Word));
    std::memcpy(pa, pb, wl * sizeof(Word));
    std::memcpy(pb, swap_buf.data(), wl * sizeof(Word));
  };

  std::size_t ci = 0;
  while (ci < candidates.size() && r < rows) {
    std::size_t wn = std::min(kWindow, candidates.size() - ci);
    const std::uint32_t* cw = candidates.data() + ci;
    ci += wn;
    // Pool rows have no bits above the top window column.
    std::size_t wl = cw[0] / kWordBits + 1;

    std::size_t pool = rows - r;
    local.assign(pool, 0);
    for (std::size_t i = 0; i < pool; ++i) {
      const Word* p = row_ptr(r + i);
      std::uint8_t m = 0;
      for (std::size_t b = 0; b < wn; ++b) m |= static_cast<std::uint8_t>(bit_at(p, cw[b]) << b);
      local[i] = m;
    }
    scratch = local;
    applied.assign(pool, 0);

    std::array<std::uint8_t, kWindow> pivot_bit{};
    std::array<std::uint8_t, kWindow> pivot_local{};
    std::size_t kk = 0;
    for (std::size_t b = 0; b < wn; ++b) {
      std::size_t found = pool;
      for (std::size_t i = kk; i < pool; ++i) {
        std::uint8_t s = scratch[i];
        for (std::size_t j = applied[i]; j < kk; ++j)
          if ((s >> pivot_bit[j]) & 1u) s ^= pivot_local[j];
        scratch[i] = s;
        applied[i] = static_cast<std::uint8_t>(kk);
        if ((s >> b) & 1u) {
          found = i;
          break;
        }
      }
      if (found == pool) continue;
      if (found != kk) {
        swap_rows(r + found, r + kk, wl);
        std::swap(local[found], local[kk]);
        std::swap(scratch[found], scratch[kk]);
        std::swap(applied[found], applied[kk]);
      }
      Word* np = row_ptr(r + kk);
      for (std::size_t j = 0; j < kk; ++j)
        if (bit_at(np, cw[pivot_bit[j]])) xor_words(np, row_ptr(r + j), wl);
      pivot_local[kk] = scratch[kk];
      for (std::size_t j = 0; j < kk; ++j) {
        if ((pivot_local[j] >> b) & 1u) {
          xor_words(row_ptr(r + j), np, wl);
          pivot_local[j] ^= pivot_local[kk];
        }
      }
      pivot_bit[kk] = static_cast<std::uint8_t>(b);
      ++kk;
    }
    if (kk == 0) continue;

    std::size_t tsize = std::size_t{1} << kk;
    table.assign(tsize * wl, 0);
    for (std::size_t m = 1; m < tsize; ++m) {
      Word* dst = table.data() + m * wl;
      const Word* prev = table.data() + (m & (m - 1)) * wl;
      const Word* piv = row_ptr(r + static_cast<std::size_t>(std::countr_zero(m)));
      for (std::size_t w = 0; w < wl; ++w) dst[w] = prev[w] ^ piv[w];
    }

    std::array<std::uint8_t, 256> local_to_mask{};
    for (std::size_t v = 0; v < (std::size_t{1} << wn); ++v) {
      std::uint8_t m = 0;
      for (std::size_t j = 0; j < kk; ++j) m |= static_cast<std::uint8_t>(((v >> pivot_bit[j]) & 1u) << j);
      local_to_mask[v] = m;
    }

    std::array<std::uint32_t, kWindow> pcol{};
    for (std::size_t j = 0; j < kk; ++j) pcol[j] = cw[pivot_bit[j]];

    // Back-substitution into the settled rows above the window.
    parallel_ranges(0, r, threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        Word* p = row_ptr(i);
        std::size_t m = 0;
        for (std::size_t j = 0; j < kk; ++j) m |= static_cast<std::size_t>(bit_at(p, pcol[j])) << j;
        if (m) xor_words(p, table.data() + m * wl, wl);
      }
    });
    // Elimination below; rows that vanish are collected for removal.
    std::size_t first = r + kk;
    std::vector<std::uint8_t> vanished(rows - first, 0);
    parallel_ranges(first, rows, threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        std::size_t m = local_to_mask[local[i - r]];
        if (!m) continue;
        Word* p = row_ptr(i);
        const Word* t = table.data() + m * wl;
        Word acc = 0;
        for (std::size_t w = 0; w < wl; ++w) acc |= (p[w] ^= t[w]);
        if (!acc) vanished[i - first] = 1;
      }
    });
    for (std::size_t j = 0; j < kk; ++j) new_pivots.push_back(pcol[j]);
    r += kk;
    for (std::size_t k = vanished.size(); k-- > 0;) {
      if (!vanished[k]) continue;
      std::size_t i = first + k;
      if (i != rows - 1) std::memcpy(row_ptr(i), row_ptr(rows - 1), stride * sizeof(Word));
      --rows;
    }
  }
  rows = r;
  data.resize(rows * stride);
  return new_pivots;
}

}  // namespace

BitRow::BitRow(std::size_t bits, std::span<const std::size_t> set_positions) : BitRow(bits) {
  for (std::size_t p : set_positions) {
    if (p >= bits) throw std::out_of_range("BitRow: position out of range");
    flip(p);
  }
}

bool BitRow::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitRow::popcount() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::optional<std::size_t> BitRow::highest_bit() const {
  for (std::size_t w = words_.size(); w-- > 0;)
    if (words_[w]) return w * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[w])));
  return std::nullopt;
}

std::vector<std::size_t> BitRow::set_bits() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word x = words_[w];
    while (x) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

BitRow& BitRow::operator^=(const BitRow& other) {
  if (other.bits_ != bits_) throw std::invalid_argument("BitRow: size mismatch");
  xor_words(words_.data(), other.words_.data(), words_.size());
  return *this;
}

std::span<Word> BitMatrix::append_zero_row() {
  data_.resize(data_.size() + stride_, 0);
  ++rows_;
  return row(rows_ - 1);
}

void BitMatrix::append_row(std::span<const Word> words) {
  if (words.size() != stride_) throw std::invalid_argument("BitMatrix: row width mismatch");
  data_.insert(data_.end(), words.begin(), words.end());
  ++rows_;
}

EchelonSpan::EchelonSpan(std::size_t columns)
    : cols_(columns), rows_(columns), lookup_(columns, -1), pivot_mask_(columns) {}

std::optional<std::size_t> EchelonSpan::pivot_row(std::size_t column) const {
  if (lookup_[column] < 0) return std::nullopt;
  return static_cast<std::size_t>(lookup_[column]);
}

BitRow EchelonSpan::row_copy(std::size_t i) const {
  BitRow out(cols_);
  std::copy(rows_.row(i).begin(), rows_.row(i).end(), out.words().begin());
  return out;
}

void EchelonSpan::reduce_in_place(std::span<Word> row) const {
  auto mask = pivot_mask_.words();
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word x = row[w] & mask[w];
    while (x) {
      std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
      x &= x - 1;
      xor_words(row.data(), rows_.row(static_cast<std::size_t>(lookup_[c])).data(), c / kWordBits + 1);
    }
  }
}

BitRow EchelonSpan::reduce(const BitRow& row) const {
  if (row.size() != cols_) throw std::invalid_argument("EchelonSpan: row width mismatch");
  BitRow out = row;
  reduce_in_place(out.words());
  return out;
}

bool EchelonSpan::insert(const BitRow& row) {
  BitMatrix one(cols_);
  one.append_row(row);
  return insert_batch(std::move(one)) == 1;
}

std::size_t EchelonSpan::insert_batch(BitMatrix&& batch, unsigned threads) {
  if (batch.columns() != cols_) throw std::invalid_argument("EchelonSpan: batch width mismatch");
  std::size_t stride = rows_.stride_;
  std::size_t fixed = rank();
  for (std::size_t i = 0; i < batch.rows(); ++i) reduce_in_place(batch.row(i));

  std::vector<Word>& data = rows_.data_;
  data.reserve((fixed + batch.rows()) * stride);
  for (std::size_t i = 0; i < batch.rows(); ++i) {
    auto r = batch.row(i);
    if (std::any_of(r.begin(), r.end(), [](Word w) { return w != 0; })) data.insert(data.end(), r.begin(), r.end());
  }
  batch.clear();
  batch.data_.shrink_to_fit();

  std::size_t rows = data.size() / stride;
  if (rows == fixed) return 0;
  std::vector<std::uint32_t> candidates;
  candidates.reserve(cols_ - fixed);
  for (std::size_t c = cols_; c-- > 0;)
    if (lookup_[c] < 0) candidates.push_back(static_cast<std::uint32_t>(c));

  std::vector<std::uint32_t> fresh = four_russians(data, stride, rows, fixed, candidates, threads);
  rows_.rows_ = rows;
  pivots_.insert(pivots_.end(), fresh.begin(), fresh.end());
  sort_rows();
  rebuild_lookup();
  return fresh.size();
}

void EchelonSpan::sort_rows() {
  std::size_t n = pivots_.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
  bool sorted = true;
  for (std::size_t i = 0; i < n; ++i)
    if (order[i] != i) sorted = false;
  if (sorted) return;
  std::size_t stride = rows_.stride_;
  std::vector<Word> data(n * stride);
  std::vector<std::uint32_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::memcpy(data.data() + i * stride, rows_.data_.data() + order[i] * stride, stride * sizeof(Word));
    piv[i] = pivots_[order[i]];
  }
  rows_.data_ = std::move(data);
  pivots_ = std::move(piv);
}

void EchelonSpan::rebuild_lookup() {
  std::fill(lookup_.begin(), lookup_.end(), -1);
  pivot_mask_ = BitRow(cols_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    lookup_[pivots_[i]] = static_cast<std::int32_t>(i);
    pivot_mask_.set(pivots_[i]);
  }
}

std::size_t EchelonSpan::intersect_dim(std::span<const std::size_t> columns) const {
  BitRow keep(cols_);
  for (std::size_t c : columns) {
    if (c >= cols_) throw std::out_of_range("intersect_dim: column out of range");
    keep.set(c);
  }
  // Project onto the complementary coordinates; the kernel of that
  // projection restricted to the span is the intersection.
  EchelonSpan projected(cols_);
  BitMatrix batch(cols_);
  batch.reserve_rows(rank());
  auto kw = keep.words();
  for (std::size_t i = 0; i < rank(); ++i) {
    auto dst = batch.append_zero_row();
    auto src = rows_.row(i);
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = src[w] & ~kw[w];
  }
  std::size_t projected_rank = projected.insert_batch(std::move(batch));
  return rank() - projected_rank;
}

std::vector<BitRow> EchelonSpan::nullspace() const {
  std::vector<BitRow> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (lookup_[f] >= 0) continue;
    BitRow v(cols_);
    v.set(f);
    for (std::size_t i = 0; i < rank(); ++i)
      if (bit_at(rows_.row(i).data(), f)) v.set(pivots_[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool EchelonSpan::well_formed() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i > 0 && pivots_[i - 1] <= pivots_[i]) return false;
    const Word* row = rows_.row(i).data();
    BitRow tmp = row_copy(i);
    auto hb = tmp.highest_bit();
    if (!hb || *hb != pivots_[i]) return false;
    for (std::size_t j = 0; j < rank(); ++j)
      if (j != i && bit_at(row, pivots_[j])) return false;
  }
  return true;
}

std::size_t rank_of(const std::vector<BitRow>& rows) {
  if (rows.empty()) return 0;
  EchelonSpan span(rows.front().size());
  BitMatrix batch(rows.front().size());
  for (const auto& r : rows) batch.append_row(r);
  return span.insert_batch(std::move(batch));
}

}  // namespace hitcalc
