#include "hitcalc/steenrod.hpp"

#include <array>

namespace hitcalc {

namespace {

// Enumerates k_j as submasks of a_j (Lucas) whose total is `remaining`.
// suffix_cap[j] bounds what positions j.. can still absorb: sum of a_i.
struct SqWalker {
  const Monomial& source;
  const std::function<void(const Monomial&)>& emit;
  std::array<std::uint64_t, kMaxVariables + 1> suffix_cap{};
  Monomial current;

  void walk(std::size_t j, std::uint64_t remaining) {
    const std::size_t t = source.variables();
    if (remaining == 0) {
      for (std::size_t i = j; i < t; ++i) current[i] = source[i];
      emit(current);
      return;
    }
    if (j == t || suffix_cap[j] < remaining) return;
    const Exponent a = source[j];
    if (j + 1 == t) {
      if (remaining <= a && (remaining & ~std::uint64_t{a}) == 0) {
        current[j] = a + static_cast<Exponent>(remaining);
        emit(current);
      }
      return;
    }
    // Walk submasks of a in increasing order, including 0.
    std::uint64_t s = 0;
    while (true) {
      if (s > remaining) break;
      current[j] = a + static_cast<Exponent>(s);
      walk(j + 1, remaining - s);
      if (s == a) break;
      s = (s - a) & a;  // next submask of a
    }
  }
};

}  // namespace

void for_each_sq_term(std::uint64_t k, const Monomial& m, const std::function<void(const Monomial&)>& emit) {
  if (k > m.degree()) return;
  SqWalker w{m, emit, {}, m};
  const std::size_t t = m.variables();
  for (std::size_t j = t; j-- > 0;) w.suffix_cap[j] = w.suffix_cap[j + 1] + m[j];
  w.walk(0, k);
}

Polynomial sq_monomial(std::uint64_t k, const Monomial& m) {
  std::vector<Monomial> terms;
  for_each_sq_term(k, m, [&](const Monomial& x) { terms.push_back(x); });
  return Polynomial(m.variables(), std::move(terms));
}

Polynomial sq(std::uint64_t k, const Polynomial& p) {
  std::vector<Monomial> terms;
  for (const auto& m : p.terms()) {
    for_each_sq_term(k, m, [&](const Monomial& x) { terms.push_back(x); });
  }
  return Polynomial(p.variables(), std::move(terms));
}

}  // namespace hitcalc
