#pragma once

#include <cstdint>
#include <functional>

#include "hitcalc/monomial.hpp"
#include "hitcalc/polynomial.hpp"

namespace hitcalc {

/// Calls `emit` once per term of Sq^k(m). Terms are distinct monomials:
/// x_j^{a_j + k_j} over compositions k = sum k_j with C(a_j, k_j) odd.
/// No term is emitted when k > deg(m).
void for_each_sq_term(std::uint64_t k, const Monomial& m, const std::function<void(const Monomial&)>& emit);

/// Sq^k applied to a monomial via the Cartan formula.
Polynomial sq_monomial(std::uint64_t k, const Monomial& m);

/// F_2-linear extension of sq_monomial.
Polynomial sq(std::uint64_t k, const Polynomial& p);

}  // namespace hitcalc
