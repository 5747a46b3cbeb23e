#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "hitcalc/degree_context.hpp"
#include "hitcalc/error.hpp"
#include "hitcalc/monomial.hpp"

using namespace hitcalc;

TEST_CASE("weight vectors") {
  CHECK(weight_vector(Monomial{12, 6, 9}) == WeightVector{1, 1, 2, 2});
  CHECK(weight_vector(Monomial{31, 0, 0, 0, 0}) == WeightVector{1, 1, 1, 1, 1});
  CHECK(weight_vector(Monomial(5)).size() == 0);
  CHECK(weight_degree(WeightVector{3, 2, 2, 2}) == 31);
  CHECK(weight_degree(WeightVector{2, 1, 1, 1, 1}) == 32);
  CHECK(weight_degree(WeightVector{}) == 0);
  CHECK(WeightVector{1, 0, 1} < WeightVector{1, 2});
  CHECK(WeightVector{3, 2, 0} == WeightVector{3, 2});
  CHECK(WeightVector::parse("3,2,2,2").to_string() == "3,2,2,2");
  CHECK_THROWS_AS(WeightVector::parse("3,x"), InvalidArgument);
}

TEST_CASE("weight degree equals monomial degree") {
  for (std::uint64_t n = 0; n <= 20; ++n)
    for_each_monomial(4, n, [&](const Monomial& m) { REQUIRE(weight_degree(weight_vector(m)) == n); });
}

TEST_CASE("monomial order") {
  CHECK(compare(Monomial{1, 2, 4, 8, 16}, Monomial{2, 1, 4, 8, 16}) < 0);
  CHECK(compare(Monomial{0, 5}, Monomial{3, 2}) < 0);
  Monomial m{3, 1, 4};
  CHECK(compare(m, m) == 0);
}

TEST_CASE("the order is total and consistent on a degree") {
  std::vector<Monomial> all;
  for_each_monomial(4, 12, [&](const Monomial& m) { all.push_back(m); });
  std::mt19937 rng(3);
  std::shuffle(all.begin(), all.end(), rng);
  std::sort(all.begin(), all.end(), MonomialLess{});
  for (std::size_t i = 0; i + 1 < all.size(); ++i) REQUIRE(compare(all[i], all[i + 1]) < 0);
  for (int k = 0; k < 2000; ++k) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    REQUIRE((compare(a, b) < 0) == (compare(b, a) > 0));
    REQUIRE((compare(a, b) == 0) == (a == b));
  }
}

TEST_CASE("spikes") {
  CHECK(is_spike(Monomial{7, 7, 0, 0, 0}));
  CHECK_FALSE(is_spike(Monomial{12, 6, 9}));
  CHECK(is_spike(Monomial{1, 3, 31}));
  CHECK(minimal_spike(5, 31) == Monomial{31, 0, 0, 0, 0});
  CHECK(minimal_spike(5, 32) == Monomial{31, 1, 0, 0, 0});
  CHECK(minimal_spike(5, 14) == Monomial{7, 7, 0, 0, 0});
  CHECK_FALSE(minimal_spike(1, 2).has_value());
}

TEST_CASE("spike weight vectors are weakly decreasing") {
  for (std::size_t t = 1; t <= 5; ++t)
    for (std::uint64_t n = 0; n <= 40; ++n)
      for_each_monomial(t, n, [&](const Monomial& m) {
        if (!is_spike(m)) return;
        auto w = weight_vector(m);
        for (std::size_t j = 1; j < w.size(); ++j) REQUIRE(w[j] <= w[j - 1]);
      });
}

TEST_CASE("minimal spike is the least spike") {
  for (std::size_t t = 1; t <= 4; ++t)
    for (std::uint64_t n = 0; n <= 30; ++n) {
      std::optional<Monomial> best;
      for_each_monomial(t, n, [&](const Monomial& m) {
        if (is_spike(m) && (!best || compare(m, *best) < 0)) best = m;
      });
      auto got = minimal_spike(t, n);
      REQUIRE(got.has_value() == best.has_value());
      if (best) CHECK(weight_vector(*got) == weight_vector(*best));
    }
}

TEST_CASE("support") {
  CHECK(is_positive_support(Monomial{1, 2, 4, 8, 16}));
  CHECK_FALSE(is_positive_support(Monomial{31, 0, 0, 0, 0}));
  CHECK(is_positive_support(Monomial{5}));
  CHECK(Monomial{1, 0, 3}.support_mask() == 0b101u);
}

TEST_CASE("text form round trip") {
  Monomial m{12, 6, 9};
  CHECK(m.to_string() == "12 6 9");
  CHECK(Monomial::parse("12 6 9") == m);
  CHECK_THROWS_AS(Monomial::parse("1 a"), InvalidArgument);
}
