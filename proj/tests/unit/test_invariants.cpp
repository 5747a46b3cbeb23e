#include <algorithm>
#include <string>

#include "doctest.h"
#include "hitcalc/error.hpp"
#include "hitcalc/invariants.hpp"
#include "hitcalc/verify.hpp"

using namespace hitcalc;

namespace {
HitEngine& shared_engine() {
  static HitEngine engine;
  return engine;
}

bool same(const ActionMatrix& a, const ActionMatrix& b) { return a == b; }

SubstitutionMap compose(const SubstitutionMap& outer, const SubstitutionMap& inner) {
  // x -> outer(inner(x)); inner is applied to the monomial first.
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < inner.source_variables(); ++j) images.push_back(substitute(outer, inner.image(j)));
  return SubstitutionMap(outer.target_variables(), std::move(images));
}
}  // namespace

TEST_CASE("group generators") {
  auto s5 = sigma(5, 5);
  CHECK(s5.image(0) == Polynomial::parse(5, "1 0 0 0 0 + 0 1 0 0 0"));
  CHECK(s5.image(1) == Polynomial(Monomial{0, 1, 0, 0, 0}));
  auto s2 = sigma(2, 5);
  CHECK(s2.image(1) == Polynomial(Monomial{0, 0, 1, 0, 0}));
  CHECK(s2.image(2) == Polynomial(Monomial{0, 1, 0, 0, 0}));
  CHECK(generators({GroupKind::symmetric, 5}).size() == 4);
  CHECK(generators({GroupKind::general_linear, 5}).size() == 5);
  CHECK_THROWS_AS(sigma(6, 5), InvalidArgument);
  CHECK(parse_group_kind("sym") == GroupKind::symmetric);
  CHECK_THROWS_AS(parse_group_kind("so"), InvalidArgument);
}

TEST_CASE("induced matrices respect the group relations") {
  auto qb = shared_engine().basis(5, 14);
  auto id = identity_matrix(qb->dim());
  CHECK(same(induced_action(*qb, SubstitutionMap::identity(5)), id));
  std::vector<ActionMatrix> m;
  for (std::size_t d = 1; d <= 5; ++d) m.push_back(induced_action(*qb, sigma(d, 5)));
  for (std::size_t d = 0; d < 5; ++d) CHECK(same(multiply(m[d], m[d]), id));
  for (std::size_t d = 0; d + 2 < 4; ++d) {
    auto a = multiply(m[d], multiply(m[d + 1], m[d]));
    auto b = multiply(m[d + 1], multiply(m[d], m[d + 1]));
    CHECK(same(a, b));
  }
  for (std::size_t d = 0; d < 3; ++d)
    for (std::size_t e = d + 2; e < 4; ++e) CHECK(same(multiply(m[d], m[e]), multiply(m[e], m[d])));
}

TEST_CASE("matrix of a composite is the product") {
  auto qb = shared_engine().basis(5, 14);
  for (std::size_t d = 1; d <= 4; ++d) {
    auto lhs = induced_action(*qb, compose(sigma(5, 5), sigma(d, 5)));
    auto rhs = multiply(induced_action(*qb, sigma(d, 5)), induced_action(*qb, sigma(5, 5)));
    auto rhs2 = multiply(induced_action(*qb, sigma(5, 5)), induced_action(*qb, sigma(d, 5)));
    CHECK((same(lhs, rhs) || same(lhs, rhs2)));
  }
}

TEST_CASE("fixed spaces") {
  auto id = identity_matrix(3);
  CHECK(fixed_space({id}, 3).dimension == 3);
  ActionMatrix swap = {BitRow(3), BitRow(3), BitRow(3)};
  swap[0].set(1);
  swap[1].set(0);
  swap[2].set(2);
  auto fs = fixed_space({swap}, 3);
  CHECK(fs.dimension == 2);
  CHECK_THROWS_AS(fixed_space({swap}, 4), InvalidArgument);
}

TEST_CASE("invariant dimensions") {
  auto& e = shared_engine();
  GroupSpec gl{GroupKind::general_linear, 5};
  CHECK(invariant_dim(e, 5, 0, gl).dimension == 1);
  CHECK(invariant_dim(e, 5, 13, gl).dimension == 0);
  CHECK(invariant_dim(e, 5, 14, gl).dimension == 1);
  CHECK(invariant_dim_omega(e, 5, 14, {2, 2, 2}, gl).dimension == 1);
  CHECK(invariant_dim_omega(e, 5, 14, {2, 4, 1}, gl).dimension == 0);
  CHECK(invariant_dim_omega(e, 5, 14, {4, 3, 1}, gl).dimension == 0);
  CHECK(invariant_dim(e, 2, 1, {GroupKind::general_linear, 2}).dimension == 0);
  CHECK_THROWS_AS(invariant_dim(e, 5, 14, {GroupKind::general_linear, 4}), InvalidArgument);
}

TEST_CASE("symmetric invariants in degree 14 are spanned by the six orbit sums") {
  auto list = read_monomial_list(std::string(HITCALC_TEST_DATA) + "/deg14_w222.txt");
  auto qb = shared_engine().basis(5, 14);
  auto basis = admissible_of_weight(*qb, {2, 2, 2}, SupportPart::all);
  REQUIRE(basis.size() == list.size());
  std::vector<ActionMatrix> mats;
  for (const auto& g : generators({GroupKind::symmetric, 5})) mats.push_back(induced_action_omega(*qb, {2, 2, 2}, g));
  auto inv = fixed_space(mats, basis.size());
  CHECK(inv.dimension == 6);
  std::vector<BitRow> sums;
  for (const auto& idx : symmetric_invariant_sums_deg14()) {
    BitRow row(basis.size());
    for (auto k : idx) {
      auto pos = std::find(basis.begin(), basis.end(), list[k - 1]) - basis.begin();
      REQUIRE(static_cast<std::size_t>(pos) < basis.size());
      row.flip(pos);
    }
    sums.push_back(row);
  }
  CHECK(rank_of(sums) == 6);
  auto all = sums;
  all.insert(all.end(), inv.basis.begin(), inv.basis.end());
  CHECK(rank_of(all) == 6);
}
