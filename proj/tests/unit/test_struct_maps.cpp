#include <algorithm>

#include "doctest.h"
#include "hitcalc/error.hpp"
#include "hitcalc/hit_quotient.hpp"
#include "hitcalc/steenrod.hpp"
#include "hitcalc/struct_maps.hpp"

using namespace hitcalc;

namespace {
HitEngine& shared_engine() {
  static HitEngine engine;
  return engine;
}
}  // namespace

TEST_CASE("psi specs") {
  auto specs = all_psi_specs(4);
  // sum over l of 2^(t - l)
  CHECK(specs.size() == 15);
  CHECK(specs.front() == PsiSpec{1, {}});
  for (const auto& s : specs) CHECK(s.valid_for(4));
  CHECK_FALSE(PsiSpec{2, {2}}.valid_for(4));
  CHECK_FALSE(PsiSpec{1, {3, 2}}.valid_for(4));
  CHECK_FALSE(PsiSpec{1, {5}}.valid_for(4));
  CHECK(PsiSpec{1, {2, 3, 4}}.to_string() == "(1,(2,3,4))");
}

TEST_CASE("q inserts a zero exponent") {
  CHECK(q_insert(1, 4, Monomial{12, 6, 9}) == Monomial{0, 12, 6, 9});
  CHECK(q_insert(4, 4, Monomial{12, 6, 9}) == Monomial{12, 6, 9, 0});
  CHECK(q_insert(2, 4, Monomial{12, 6, 9}) == Monomial{12, 0, 6, 9});
  CHECK_THROWS_AS(q_insert(5, 4, Monomial{12, 6, 9}), InvalidArgument);
  CHECK_THROWS_AS(q_insert(1, 5, Monomial{12, 6, 9}), InvalidArgument);
}

TEST_CASE("psi examples") {
  PsiSpec spec{1, {2, 3, 4}};
  CHECK(psi_condition(spec, Monomial{12, 6, 9}) == 1u);
  CHECK(psi(spec, Monomial{12, 6, 9}) == Monomial{7, 8, 4, 8});
  CHECK_FALSE(psi_condition(spec, Monomial{12, 8, 9}).has_value());
  CHECK_FALSE(psi(spec, Monomial{12, 8, 9}).has_value());
  CHECK(psi(spec, Monomial{12, 8, 9}, PsiMode::lenient) == Monomial{7, 8, 6, 8});
  for (unsigned l = 1; l <= 4; ++l) CHECK(psi(PsiSpec{l, {}}, Monomial{12, 6, 9}) == q_insert(l, 4, Monomial{12, 6, 9}));
}

TEST_CASE("psi does not commute with Sq^2") {
  PsiSpec spec{1, {2, 3, 4}};
  Polynomial lhs = sq(2, Polynomial(*psi(spec, Monomial{12, 6, 9})));
  CHECK(lhs == Polynomial(Monomial{9, 8, 4, 8}));
  CHECK(sq_monomial(2, Monomial{12, 6, 9}) == Polynomial(Monomial{12, 8, 9}));
  CHECK(psi(spec, sq_monomial(2, Monomial{12, 6, 9})).is_zero());
}

TEST_CASE("p projection") {
  CHECK(p_project(4, {5}, Polynomial(Monomial{1, 2, 4, 8, 16})) == Polynomial(Monomial{1, 2, 4, 24}));
  for (unsigned l = 1; l <= 5; ++l) {
    Monomial x(5);
    x[l - 1] = 1;
    CHECK(p_project(l, {}, Polynomial(x)).is_zero());
  }
  CHECK(p_project(1, {2, 3}, Polynomial(Monomial{1, 0, 0})) == Polynomial::parse(2, "1 0 + 0 1"));
  CHECK_THROWS_AS(p_project(2, {1}, Polynomial(Monomial{1, 0, 0})), InvalidArgument);
}

TEST_CASE("p does not raise the weight") {
  for (const auto& s : all_psi_specs(5))
    for_each_monomial(5, 9, [&](const Monomial& m) {
      auto w = weight_vector(m);
      Polynomial image = p_project(s.l, s.L, Polynomial(m));
      for (const auto& term : image.terms()) REQUIRE(weight_vector(term) <= w);
    });
}

TEST_CASE("q commutes with squares and psi keeps the weight") {
  for (std::uint64_t d = 0; d <= 7; ++d)
    for_each_monomial(3, d, [&](const Monomial& m) {
      for (unsigned l = 1; l <= 4; ++l)
        for (std::uint64_t k = 0; k <= 7; ++k) {
          std::vector<Monomial> mapped;
          Polynomial image = sq_monomial(k, m);
          for (const auto& term : image.terms()) mapped.push_back(q_insert(l, 4, term));
          REQUIRE(sq_monomial(k, q_insert(l, 4, m)) == Polynomial(4, mapped));
        }
    });
  auto& e = shared_engine();
  for (std::uint64_t n : {7u, 11u, 13u}) {
    auto qb = e.basis(4, n);
    for (const auto& s : all_psi_specs(5))
      for (const auto& m : qb->admissible())
        for (auto mode : {PsiMode::strict, PsiMode::lenient})
          if (auto img = psi(s, m, mode)) {
            REQUIRE(img->degree() == m.degree());
            if (mode == PsiMode::strict) REQUIRE(weight_vector(*img) == weight_vector(m));
          }
  }
  // Without the bit clauses the weight can move.
  bool moved = false;
  for (const auto& s : all_psi_specs(5))
    for (const auto& m : e.basis(4, 13)->admissible())
      if (auto img = psi(s, m, PsiMode::lenient); img && weight_vector(*img) != weight_vector(m)) moved = true;
  CHECK(moved);
}

TEST_CASE("Mothebe-Uys lift stays admissible") {
  auto& e = shared_engine();
  CHECK(mothebe_uys_lift(1, 3, Monomial{12, 6, 9}) == Monomial{7, 12, 6, 9});
  CHECK(mothebe_uys_lift(2, 1, Monomial{1, 2}) == Monomial{1, 1, 2});
  for (std::uint64_t n : {7u, 11u, 13u})
    for (unsigned d = 1; d <= 2; ++d) {
      auto high = e.basis(5, n + (1u << d) - 1);
      for (const auto& m : e.basis(4, n)->admissible())
        for (unsigned l = 1; l <= 5; ++l) REQUIRE(high->is_admissible(mothebe_uys_lift(l, d, m)));
    }
}

TEST_CASE("phi sets") {
  auto empty = phi_sets({}, 4);
  CHECK(empty.phi0.empty());
  CHECK(empty.phi_pos.empty());
  auto one = phi_sets({Monomial{12, 6, 9}}, 4);
  CHECK(one.phi0.size() == 4);
  CHECK(std::find(one.phi_pos.begin(), one.phi_pos.end(), Monomial{7, 8, 4, 8}) != one.phi_pos.end());
  for (const auto& m : one.phi_pos) CHECK(is_positive_support(m));
  CHECK(std::is_sorted(one.phi0.begin(), one.phi0.end(), MonomialLess{}));
  auto qb = shared_engine().basis(3, 7);
  auto sets = phi_sets(qb->admissible(), 4);
  CHECK(sets.phi0.size() <= 4 * qb->dim());
}

TEST_CASE("conjecture check") {
  auto& e = shared_engine();
  auto vac = verify_sum_conjecture(e, 5, 14, {2, 4, 1});
  CHECK(vac.sources == 0);
  CHECK(vac.holds());
  for (std::uint64_t n = 1; n <= 10; ++n)
    for (const auto& w : weight_vectors_of_degree(3, n)) {
      auto rep = verify_sum_conjecture(e, 4, n, w);
      REQUIRE(rep.sources == admissible_of_weight(*e.basis(3, n), w, SupportPart::all).size());
      for (const auto& c : rep.counterexamples) REQUIRE(c.source.variables() == 3);
    }
}
