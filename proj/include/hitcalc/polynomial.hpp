#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hitcalc/monomial.hpp"

namespace hitcalc {

/// A polynomial over F_2: a finite set of monomials in a fixed number of
/// variables. Terms are kept sorted ascending under the monomial order and
/// are pairwise distinct, so equality is structural.
class Polynomial {
 public:
  /// The zero polynomial in `variables` variables.
  explicit Polynomial(std::size_t variables);
  Polynomial(const Monomial& m);  // NOLINT: a monomial is a polynomial
  /// Terms are summed mod 2: a monomial listed twice cancels.
  Polynomial(std::size_t variables, std::vector<Monomial> terms);

  std::size_t variables() const { return vars_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool contains(const Monomial& m) const;

  /// Degree of a homogeneous polynomial; throws on a non-homogeneous one.
  /// The zero polynomial has no degree and also throws.
  std::uint64_t homogeneous_degree() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial square(const Polynomial& p);

  /// Terms joined by " + ", each in canonical exponent form; "0" for zero.
  std::string to_string() const;
  static Polynomial parse(std::size_t variables, std::string_view text);

 private:
  std::size_t vars_;
  std::vector<Monomial> terms_;
};

/// Sorts and cancels pairs in place; the result is a valid term list.
void normalize_terms(std::vector<Monomial>& terms);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// p^2, computed termwise.
Polynomial square(const Polynomial& p);

/// p^e by repeated squaring.
Polynomial power(const Polynomial& p, std::uint64_t e);

/// Ring homomorphism F_2[x_1..x_s] -> F_2[y_1..y_t] given by the images
/// of the source variables.
class SubstitutionMap {
 public:
  SubstitutionMap(std::size_t target_variables, std::vector<Polynomial> images);

  /// x_j -> x_j in t variables.
  static SubstitutionMap identity(std::size_t t);

  std::size_t source_variables() const { return images_.size(); }
  std::size_t target_variables() const { return target_; }
  const Polynomial& image(std::size_t j) const { return images_[j]; }

 private:
  std::size_t target_;
  std::vector<Polynomial> images_;
};

Polynomial substitute(const SubstitutionMap& map, const Monomial& m);
Polynomial substitute(const SubstitutionMap& map, const Polynomial& p);

}  // namespace hitcalc
