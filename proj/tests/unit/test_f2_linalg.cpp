#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "hitcalc/f2_linalg.hpp"

using namespace hitcalc;

namespace {

using Dense = std::vector<std::vector<bool>>;

Dense dense_rref(Dense rows, std::size_t cols) {
  Dense out;
  for (std::size_t c = cols; c-- > 0;) {
    auto it = std::find_if(rows.begin(), rows.end(), [c](const auto& r) { return r[c]; });
    if (it == rows.end()) continue;
    auto p = *it;
    rows.erase(it);
    auto clear = [&](std::vector<bool>& r) {
      if (r[c])
        for (std::size_t k = 0; k < cols; ++k) r[k] = r[k] != p[k];
    };
    for (auto& r : rows) clear(r);
    for (auto& r : out) clear(r);
    out.push_back(p);
  }
  return out;
}

struct Random {
  std::mt19937_64 rng;
  explicit Random(unsigned seed) : rng(seed) {}
  BitRow row(std::size_t cols, double density) {
    std::bernoulli_distribution bit(density);
    BitRow r(cols);
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) r.set(c);
    return r;
  }
};

std::vector<bool> to_dense(const BitRow& r) {
  std::vector<bool> v(r.size());
  for (std::size_t c = 0; c < r.size(); ++c) v[c] = r.test(c);
  return v;
}

}  // namespace

TEST_CASE("bit rows") {
  BitRow r(130);
  CHECK(r.is_zero());
  CHECK_FALSE(r.highest_bit().has_value());
  r.set(3);
  r.set(129);
  CHECK(r.popcount() == 2);
  CHECK(*r.highest_bit() == 129);
  CHECK(r.set_bits() == std::vector<std::size_t>{3, 129});
  r.flip(3);
  CHECK(r.set_bits() == std::vector<std::size_t>{129});
  BitRow s(130);
  s.set(129);
  r ^= s;
  CHECK(r.is_zero());
}

TEST_CASE("span basics") {
  EchelonSpan span(10);
  BitRow r(10);
  r.set(2);
  r.set(7);
  CHECK(span.reduce(r) == r);
  CHECK(span.insert(r));
  CHECK(span.rank() == 1);
  CHECK_FALSE(span.insert(r));
  CHECK(span.reduce(r).is_zero());
  CHECK(span.is_pivot(7));
  CHECK(span.pivot_row(7) == std::optional<std::size_t>(0));
  std::vector<std::size_t> cols{2, 7};
  CHECK(span.intersect_dim(cols) == 1);
  std::vector<std::size_t> other{0, 1};
  CHECK(span.intersect_dim(other) == 0);
}

TEST_CASE("whole space intersects any k columns in dimension k") {
  EchelonSpan span(40);
  for (std::size_t c = 0; c < 40; ++c) {
    BitRow r(40);
    r.set(c);
    span.insert(r);
  }
  std::vector<std::size_t> cols{1, 5, 9, 33};
  CHECK(span.intersect_dim(cols) == 4);
}

TEST_CASE("single and batch insertion match dense RREF") {
  Random rnd(1);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t cols = 1 + rnd.rng() % 500;
    std::size_t n = rnd.rng() % 150;
    double density = (1 + rnd.rng() % 40) / 100.0;
    Dense dense;
    BitMatrix batch(cols), batch2(cols);
    EchelonSpan single(cols);
    for (std::size_t i = 0; i < n; ++i) {
      BitRow r = rnd.row(cols, density);
      dense.push_back(to_dense(r));
      batch.append_row(r);
      batch2.append_row(r);
      single.insert(r);
    }
    EchelonSpan a(cols), b(cols);
    a.insert_batch(std::move(batch));
    b.insert_batch(std::move(batch2), 3);
    auto oracle = dense_rref(dense, cols);
    REQUIRE(a.rank() == oracle.size());
    REQUIRE(single.rank() == oracle.size());
    REQUIRE(b.rank() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      REQUIRE(to_dense(a.row_copy(i)) == oracle[i]);
      REQUIRE(to_dense(b.row_copy(i)) == oracle[i]);
      REQUIRE(to_dense(single.row_copy(i)) == oracle[i]);
    }
    REQUIRE(a.well_formed());
  }
}

TEST_CASE("batches on top of an existing span") {
  Random rnd(2);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t cols = 64 + rnd.rng() % 700;
    EchelonSpan incremental(cols), reference(cols);
    Dense dense;
    for (int round = 0; round < 4; ++round) {
      BitMatrix batch(cols);
      std::size_t n = rnd.rng() % 200;
      for (std::size_t i = 0; i < n; ++i) {
        BitRow r = rnd.row(cols, 0.05 + 0.1 * round);
        batch.append_row(r);
        reference.insert(r);
        dense.push_back(to_dense(r));
      }
      incremental.insert_batch(std::move(batch));
      REQUIRE(incremental.rank() == reference.rank());
      REQUIRE(incremental.well_formed());
    }
    auto oracle = dense_rref(dense, cols);
    REQUIRE(incremental.rank() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) REQUIRE(to_dense(incremental.row_copy(i)) == oracle[i]);
  }
}

TEST_CASE("rank does not depend on insertion order") {
  Random rnd(3);
  std::vector<BitRow> rows;
  for (int i = 0; i < 300; ++i) rows.push_back(rnd.row(257, 0.03));
  std::size_t r0 = rank_of(rows);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(rows.begin(), rows.end(), rnd.rng);
    REQUIRE(rank_of(rows) == r0);
  }
}

TEST_CASE("intersect_dim matches subspace enumeration") {
  Random rnd(4);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t cols = 8 + rnd.rng() % 193;
    EchelonSpan span(cols);
    std::size_t want = 1 + rnd.rng() % 16;
    while (span.rank() < want) span.insert(rnd.row(cols, 0.15));
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < cols; ++c)
      if (rnd.rng() % 2) chosen.push_back(c);
    std::vector<bool> allowed(cols, false);
    for (auto c : chosen) allowed[c] = true;
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << span.rank()); ++mask) {
      BitRow v(cols);
      for (std::size_t i = 0; i < span.rank(); ++i)
        if ((mask >> i) & 1) v ^= span.row_copy(i);
      bool inside = true;
      for (auto c : v.set_bits()) inside = inside && allowed[c];
      count += inside ? 1 : 0;
    }
    std::size_t dim = 0;
    while ((std::size_t{1} << dim) < count) ++dim;
    REQUIRE((std::size_t{1} << dim) == count);
    REQUIRE(span.intersect_dim(chosen) == dim);
  }
}

TEST_CASE("dim(A + B) + dim(A meet B) = dim A + dim B for coordinate B") {
  Random rnd(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t cols = 10 + rnd.rng() % 120;
    EchelonSpan a(cols);
    for (int i = 0; i < 20; ++i) a.insert(rnd.row(cols, 0.1));
    std::vector<std::size_t> b;
    for (std::size_t c = 0; c < cols; ++c)
      if (rnd.rng() % 3 == 0) b.push_back(c);
    EchelonSpan sum = a;
    for (auto c : b) {
      BitRow e(cols);
      e.set(c);
      sum.insert(e);
    }
    REQUIRE(sum.rank() + a.intersect_dim(b) == a.rank() + b.size());
  }
}

TEST_CASE("nullspace solves the row system") {
  Random rnd(6);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t cols = 1 + rnd.rng() % 90;
    EchelonSpan span(cols);
    for (int i = 0; i < 25; ++i) span.insert(rnd.row(cols, 0.2));
    auto null = span.nullspace();
    REQUIRE(null.size() + span.rank() == cols);
    REQUIRE(rank_of(null) == null.size());
    for (const auto& v : null)
      for (std::size_t i = 0; i < span.rank(); ++i) {
        BitRow r = span.row_copy(i);
        std::size_t dot = 0;
        for (auto c : r.set_bits()) dot += v.test(c) ? 1 : 0;
        REQUIRE(dot % 2 == 0);
      }
  }
}
