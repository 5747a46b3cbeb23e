#include <map>
#include <random>

#include "doctest.h"
#include "hitcalc/degree_context.hpp"
#include "hitcalc/steenrod.hpp"

using namespace hitcalc;

namespace {

// Expands prod_j (x_j + T x_j^2)^{a_j} one factor at a time and returns the
// coefficient of T^k.
Polynomial total_square_oracle(std::uint64_t k, const Monomial& m) {
  const std::size_t t = m.variables();
  std::map<std::pair<std::vector<Exponent>, std::uint64_t>, bool> acc;
  acc[{std::vector<Exponent>(t, 0), 0}] = true;
  for (std::size_t j = 0; j < t; ++j)
    for (Exponent r = 0; r < m[j]; ++r) {
      std::map<std::pair<std::vector<Exponent>, std::uint64_t>, bool> next;
      for (const auto& [key, odd] : acc) {
        if (!odd) continue;
        auto lin = key;
        lin.first[j] += 1;
        next[lin] = !next[lin];
        auto quad = key;
        quad.first[j] += 2;
        quad.second += 1;
        next[quad] = !next[quad];
      }
      acc.swap(next);
    }
  std::vector<Monomial> terms;
  for (const auto& [key, odd] : acc)
    if (odd && key.second == k) terms.push_back(Monomial(std::span<const Exponent>(key.first)));
  return Polynomial(t, terms);
}

}  // namespace

TEST_CASE("examples") {
  CHECK(sq_monomial(2, Monomial{7, 8, 4, 8}) == Polynomial(Monomial{9, 8, 4, 8}));
  CHECK(sq_monomial(1, Monomial{1}) == Polynomial(Monomial{2}));
  CHECK(sq_monomial(2, Monomial{12, 6, 9}) == Polynomial(Monomial{12, 8, 9}));
  CHECK(sq_monomial(3, Monomial{2}).is_zero());
  CHECK(sq(1, Polynomial::parse(2, "1 0 + 0 1")) == Polynomial::parse(2, "2 0 + 0 2"));
  Polynomial p = Polynomial::parse(3, "1 2 3 + 0 0 6");
  CHECK(sq(0, p) == p);
  CHECK(sq_monomial(1, Monomial{1, 1}) == Polynomial::parse(2, "2 1 + 1 2"));
}

TEST_CASE("Cartan expansion matches the total-square oracle") {
  for (std::size_t t = 1; t <= 3; ++t)
    for (std::uint64_t n = 0; n <= 9; ++n)
      for_each_monomial(t, n, [&](const Monomial& m) {
        for (std::uint64_t k = 0; k <= n + 1; ++k) REQUIRE(sq_monomial(k, m) == total_square_oracle(k, m));
      });
}

TEST_CASE("Cartan formula on products") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Monomial a(4), b(4);
    for (std::size_t j = 0; j < 4; ++j) a[j] = rng() % 4, b[j] = rng() % 4;
    std::uint64_t k = rng() % 10;
    Polynomial rhs(4);
    for (std::uint64_t i = 0; i <= k; ++i) rhs += sq_monomial(i, a) * sq_monomial(k - i, b);
    REQUIRE(sq(k, Polynomial(a) * Polynomial(b)) == rhs);
  }
}

TEST_CASE("instability and Adem relations") {
  for (std::size_t t = 1; t <= 3; ++t)
    for (std::uint64_t n = 0; n <= 10; ++n)
      for_each_monomial(t, n, [&](const Monomial& m) {
        Polynomial p(m);
        REQUIRE(sq_monomial(n, m) == square(p));
        REQUIRE(sq_monomial(n + 1, m).is_zero());
        REQUIRE(sq(1, sq_monomial(1, m)).is_zero());
        REQUIRE(sq(1, sq_monomial(2, m)) == sq_monomial(3, m));
        REQUIRE(sq(2, sq_monomial(2, m)) == sq(3, sq_monomial(1, m)));
        REQUIRE(sq(1, sq_monomial(4, m)) == sq_monomial(5, m));
      });
}

TEST_CASE("squares never change the support") {
  for_each_monomial(4, 9, [&](const Monomial& m) {
    for (std::uint64_t k = 1; k <= 9; ++k) {
      Polynomial image = sq_monomial(k, m);
      for (const auto& term : image.terms()) REQUIRE(term.support_mask() == m.support_mask());
    }
  });
}
