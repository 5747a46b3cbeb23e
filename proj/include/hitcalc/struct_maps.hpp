#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hitcalc/hit_quotient.hpp"
#include "hitcalc/monomial.hpp"
#include "hitcalc/polynomial.hpp"

namespace hitcalc {

/// (l, L) with 1 <= l < l_1 < ... < l_r <= t.
struct PsiSpec {
  unsigned l = 1;
  std::vector<unsigned> L;

  bool valid_for(std::size_t t) const;
  std::string to_string() const;  // "(1,(2,3,4))"
  friend bool operator==(const PsiSpec&, const PsiSpec&) = default;
};

/// Every spec in N_t, ordered by l then by L lexicographically.
std::vector<PsiSpec> all_psi_specs(std::size_t t);

enum class PsiMode {
  strict,   // every clause of the defining condition
  lenient,  // only the exponent-equality and size clauses
};

/// Inserts a zero exponent at position l: m has t-1 variables.
Monomial q_insert(unsigned l, std::size_t t, const Monomial& m);

/// The index u of the defining condition, or nullopt. Requires |L| >= 1.
std::optional<unsigned> psi_condition(const PsiSpec& spec, const Monomial& m, PsiMode mode = PsiMode::strict);

/// psi_{(l,L)}(m) in t = m.variables() + 1 variables; nullopt means zero.
/// In lenient mode a division that would leave a negative exponent also
/// gives zero.
std::optional<Monomial> psi(const PsiSpec& spec, const Monomial& m, PsiMode mode = PsiMode::strict);

/// Termwise psi of a polynomial, zero images dropped.
Polynomial psi(const PsiSpec& spec, const Polynomial& p, PsiMode mode = PsiMode::strict);

/// Substitution x_j -> x_j (j < l), x_l -> sum_{p in L} x_{p-1},
/// x_j -> x_{j-1} (j > l), from t to t-1 variables.
SubstitutionMap p_map(unsigned l, const std::vector<unsigned>& L, std::size_t t);
Polynomial p_project(unsigned l, const std::vector<unsigned>& L, const Polynomial& p);

/// x_l^{2^d - 1} q_{(l,t)}(m), t = m.variables() + 1.
Monomial mothebe_uys_lift(unsigned l, unsigned d, const Monomial& m);

struct PhiSets {
  std::vector<Monomial> phi0;    // ascending, distinct
  std::vector<Monomial> phi_pos; // ascending, distinct, full support
};

PhiSets phi_sets(const std::vector<Monomial>& V, std::size_t t, PsiMode mode = PsiMode::strict);

struct SumCounterexample {
  Monomial source;
  PsiSpec spec;
  Monomial image;
};

struct SumConjectureReport {
  std::size_t t = 0;
  std::uint64_t n = 0;
  WeightVector weight;
  std::size_t sources = 0;  // admissible monomials of weight w in t-1 variables
  std::size_t images = 0;   // distinct nonzero images checked
  std::vector<SumCounterexample> counterexamples;
  bool holds() const { return counterexamples.empty(); }
};

/// Applies every psi_{(l,L)} to the admissible monomials of weight w in
/// t-1 variables and reports the images that are not admissible (or not of
/// weight w) in t variables.
SumConjectureReport verify_sum_conjecture(HitEngine& engine, std::size_t t, std::uint64_t n, const WeightVector& w,
                                          PsiMode mode = PsiMode::strict);

}  // namespace hitcalc
