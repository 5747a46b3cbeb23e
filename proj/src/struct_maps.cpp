#include "hitcalc/struct_maps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "hitcalc/error.hpp"

namespace hitcalc {

bool PsiSpec::valid_for(std::size_t t) const {
  if (l < 1 || l > t) return false;
  unsigned prev = l;
  for (unsigned x : L) {
    if (x <= prev || x > t) return false;
    prev = x;
  }
  return true;
}

std::string PsiSpec::to_string() const { return fmt::format("({},({}))", l, fmt::join(L, ",")); }

std::vector<PsiSpec> all_psi_specs(std::size_t t) {
  std::vector<PsiSpec> out;
  for (unsigned l = 1; l <= t; ++l) {
    std::size_t free = t - l;
    std::vector<std::vector<unsigned>> subsets;
    for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
      std::vector<unsigned> L;
      for (std::size_t i = 0; i < free; ++i)
        if (mask >> i & 1u) L.push_back(l + 1 + static_cast<unsigned>(i));
      subsets.push_back(std::move(L));
    }
    std::sort(subsets.begin(), subsets.end());
    for (auto& L : subsets) out.push_back({l, std::move(L)});
  }
  return out;
}

Monomial q_insert(unsigned l, std::size_t t, const Monomial& m) {
  if (t < 1 || t > kMaxVariables) throw InvalidArgument(fmt::format("q_insert: target count {} out of range", t));
  if (m.variables() + 1 != t) throw InvalidArgument("q_insert: monomial must have t-1 variables");
  if (l < 1 || l > t) throw InvalidArgument(fmt::format("q_insert: index {} out of range 1..{}", l, t));
  Monomial out(t);
  for (std::size_t j = 0, k = 0; j < t; ++j) {
    if (j + 1 == l) continue;
    out[j] = m[k++];
  }
  return out;
}

std::optional<unsigned> psi_condition(const PsiSpec& spec, const Monomial& m, PsiMode mode) {
  std::size_t t = m.variables() + 1;
  if (!spec.valid_for(t)) throw InvalidArgument(fmt::format("psi spec {} is not in N_{}", spec.to_string(), t));
  std::size_t r = spec.L.size();
  if (r == 0) throw InvalidArgument("psi_condition needs a nonempty L");
  const std::uint64_t top = std::uint64_t{1} << r;
  // Exponent of x_{l_d - 1} in m, d 1-based.
  auto a = [&](std::size_t d) -> std::uint64_t { return m[spec.L[d - 1] - 2]; };
  auto bit = [](std::uint64_t v, std::size_t j) { return (v >> j) & 1u; };
  for (std::size_t u = 1; u <= r; ++u) {
    bool ok = true;
    for (std::size_t d = 1; d < u && ok; ++d) ok = a(d) + 1 == top;
    if (!ok) break;  // a larger u would need the same equalities
    if (a(u) + 1 <= top) continue;
    if (mode == PsiMode::strict) {
      for (std::size_t d = 1; d <= u && ok; ++d) ok = bit(a(u), r - d);
      for (std::size_t d = u + 1; d <= r && ok; ++d) ok = bit(a(d), r - d);
    }
    if (ok) return static_cast<unsigned>(u);
  }
  return std::nullopt;
}

std::optional<Monomial> psi(const PsiSpec& spec, const Monomial& m, PsiMode mode) {
  std::size_t t = m.variables() + 1;
  if (spec.L.empty()) return q_insert(spec.l, t, m);
  auto u = psi_condition(spec, m, mode);
  if (!u) return std::nullopt;
  std::size_t r = spec.L.size();
  Monomial out = q_insert(spec.l, t, m);
  out[spec.l - 1] += static_cast<Exponent>((std::uint64_t{1} << r) - 1);
  // Divide by X_{(L,u)}.
  // Strict mode guarantees divisibility; lenient mode maps to zero otherwise.
  bool divisible = true;
  auto divide = [&](unsigned var, std::uint64_t e) {
    if (out[var - 1] < e) {
      if (mode == PsiMode::strict)
        throw std::logic_error(fmt::format("psi {} of ({}) divides below zero", spec.to_string(), m.to_string()));
      divisible = false;
      return;
    }
    out[var - 1] -= static_cast<Exponent>(e);
  };
  std::uint64_t head = 0;
  for (std::size_t d = 1; d <= *u; ++d) head += std::uint64_t{1} << (r - d);
  divide(spec.L[*u - 1], head);
  for (std::size_t d = *u + 1; d <= r; ++d) divide(spec.L[d - 1], std::uint64_t{1} << (r - d));
  if (!divisible) return std::nullopt;
  return out;
}

Polynomial psi(const PsiSpec& spec, const Polynomial& p, PsiMode mode) {
  std::vector<Monomial> terms;
  for (const auto& m : p.terms())
    if (auto img = psi(spec, m, mode)) terms.push_back(*img);
  return Polynomial(p.variables() + 1, std::move(terms));
}

SubstitutionMap p_map(unsigned l, const std::vector<unsigned>& L, std::size_t t) {
  PsiSpec spec{l, L};
  if (t < 2 || !spec.valid_for(t)) throw InvalidArgument(fmt::format("p map {} is not in N_{}", spec.to_string(), t));
  std::size_t s = t - 1;
  std::vector<Polynomial> images;
  auto var = [&](std::size_t j) {
    Monomial x(s);
    x[j] = 1;
    return Polynomial(x);
  };
  for (std::size_t j = 1; j <= t; ++j) {
    if (j < l) {
      images.push_back(var(j - 1));
    } else if (j == l) {
      Polynomial sum(s);
      for (unsigned p : L) sum += var(p - 2);
      images.push_back(std::move(sum));
    } else {
      images.push_back(var(j - 2));
    }
  }
  return SubstitutionMap(s, std::move(images));
}

Polynomial p_project(unsigned l, const std::vector<unsigned>& L, const Polynomial& p) {
  return substitute(p_map(l, L, p.variables()), p);
}

Monomial mothebe_uys_lift(unsigned l, unsigned d, const Monomial& m) {
  if (d < 1 || d >= 32) throw InvalidArgument("mothebe_uys_lift: d out of range");
  Monomial out = q_insert(l, m.variables() + 1, m);
  out[l - 1] = static_cast<Exponent>((std::uint64_t{1} << d) - 1);
  return out;
}

PhiSets phi_sets(const std::vector<Monomial>& V, std::size_t t, PsiMode mode) {
  std::set<Monomial, MonomialLess> zero, pos;
  for (const auto& spec : all_psi_specs(t)) {
    for (const auto& v : V) {
      auto img = psi(spec, v, mode);
      if (!img) continue;
      if (spec.L.empty())
        zero.insert(*img);
      else if (is_positive_support(*img))
        pos.insert(*img);
    }
  }
  return {{zero.begin(), zero.end()}, {pos.begin(), pos.end()}};
}

SumConjectureReport verify_sum_conjecture(HitEngine& engine, std::size_t t, std::uint64_t n, const WeightVector& w,
                                          PsiMode mode) {
  if (t < 2) throw InvalidArgument("verify_sum_conjecture needs t >= 2");
  if (weight_degree(w) != n) throw InvalidArgument(fmt::format("weight ({}) is not of degree {}", w.to_string(), n));
  SumConjectureReport rep;
  rep.t = t;
  rep.n = n;
  rep.weight = w;
  auto sources = admissible_of_weight(*engine.basis(t - 1, n), w, SupportPart::all);
  rep.sources = sources.size();
  if (sources.empty()) return rep;
  auto target = engine.basis(t, n);
  std::set<Monomial, MonomialLess> seen;
  for (const auto& spec : all_psi_specs(t)) {
    for (const auto& x : sources) {
      auto img = psi(spec, x, mode);
      if (!img) continue;
      if (seen.insert(*img).second) ++rep.images;
      if (!target->is_admissible(*img) || weight_vector(*img) != w) rep.counterexamples.push_back({x, spec, *img});
    }
  }
  return rep;
}

}  // namespace hitcalc
