#include <algorithm>
#include <vector>

#include "doctest.h"
#include "hitcalc/arith.hpp"

using namespace hitcalc::arith;

TEST_CASE("alpha counts binary ones") {
  CHECK(alpha(0) == 0);
  CHECK(alpha(70) == 3);
  CHECK(alpha(31) == 5);
  CHECK(alpha_at(70, 1) == 1);
  CHECK(alpha_at(70, 0) == 0);
  CHECK(alpha_at(70, 80) == 0);
}

TEST_CASE("mu examples") {
  CHECK(mu(0) == 0);
  CHECK(mu(67) == 3);
  CHECK(mu(139) == 5);
  CHECK(mu(14) == 2);
}

TEST_CASE("mu matches a partition search") {
  const std::size_t limit = 10000;
  std::vector<unsigned> best(limit + 1, ~0u);
  best[0] = 0;
  for (std::size_t v = 1; v <= limit; ++v)
    for (std::size_t p = 1; p <= v; p = 2 * p + 1)
      if (best[v - p] != ~0u) best[v] = std::min(best[v], best[v - p] + 1);
  for (std::size_t n = 0; n <= limit; ++n) REQUIRE(mu(n) == best[n]);
}

TEST_CASE("binom_mod2 agrees with exact binomials up to 64") {
  CHECK(binom_mod2(7, 2));
  CHECK_FALSE(binom_mod2(8, 2));
  std::vector<std::vector<std::uint64_t>> c(65, std::vector<std::uint64_t>(65, 0));
  for (std::size_t a = 0; a <= 64; ++a) {
    c[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
  }
  for (std::uint64_t a = 0; a <= 64; ++a)
    for (std::uint64_t b = 0; b <= 64; ++b) REQUIRE(binom_mod2(a, b) == (c[a][b] % 2 == 1));
}

TEST_CASE("generic degree") {
  CHECK(generic_degree({3, 1, 2}) == 13);
  CHECK(generic_degree({5, 13, 1}) == 31);
  CHECK(generic_degree({5, 0, 0}) == 0);
  CHECK(generic_degree({5, 21, 1}) == 47);
}

TEST_CASE("Wood and Kameko criteria") {
  CHECK_FALSE(wood_trivial(5, 31));
  CHECK(wood_trivial(1, 2));
  CHECK_FALSE(wood_trivial(5, 0));
  CHECK(kameko_iso(2, 1));
  CHECK_FALSE(kameko_iso(5, 13));
  CHECK(kameko_iso(5, 139));
}

TEST_CASE("closed-form transfer") {
  CHECK(sum_phuc_dimension(6, 1894) == 119322);
  CHECK(sum_phuc_dimension(6, 0) == 0);
  CHECK(sum_phuc_dimension(5, 250) == 7750);
  CHECK(validate_dlP(6, 47));
  CHECK(validate_dlP(6, 67));
  CHECK_FALSE(validate_dlP(4, 0));
}
