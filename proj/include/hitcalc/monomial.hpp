#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hitcalc {

/// Upper bound on the number of variables a Monomial can carry.
inline constexpr std::size_t kMaxVariables = 8;

using Exponent = std::uint32_t;

/// Weight vector: entry j counts the variables whose exponent has bit j set.
/// Stored trimmed (no trailing zeros). Lexicographic comparison on trimmed
/// sequences agrees with comparison after zero padding.
class WeightVector {
 public:
  WeightVector() = default;
  WeightVector(std::initializer_list<unsigned> entries);
  explicit WeightVector(std::vector<unsigned> entries);

  const std::vector<unsigned>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// Entry at 0-based position j; zero past the end.
  unsigned operator[](std::size_t j) const { return j < entries_.size() ? entries_[j] : 0u; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend std::strong_ordering operator<=>(const WeightVector& a, const WeightVector& b);

  std::string to_string() const;  // "3,2,2,2"
  static WeightVector parse(std::string_view text);

 private:
  void trim();
  std::vector<unsigned> entries_;
};

/// sum_j 2^(j-1) w_j
std::uint64_t weight_degree(const WeightVector& w);

/// x_1^{u_1} ... x_t^{u_t}. Exponent of x_j lives at index j-1.
class Monomial {
 public:
  Monomial() = default;
  /// The constant monomial in `variables` variables.
  explicit Monomial(std::size_t variables);
  Monomial(std::initializer_list<Exponent> exponents);
  explicit Monomial(std::span<const Exponent> exponents);

  std::size_t variables() const { return vars_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), vars_}; }

  std::uint64_t degree() const;
  /// Bit j set iff x_{j+1} has a nonzero exponent.
  unsigned support_mask() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Canonical text: space-separated exponents, e.g. "12 6 9".
  std::string to_string() const;
  static Monomial parse(std::string_view text);

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t vars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

WeightVector weight_vector(const Monomial& m);

/// Weight first, then exponents, both left-lexicographic.
std::strong_ordering compare(const Monomial& a, const Monomial& b);

/// Strict-weak-ordering adaptor for the monomial order.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

/// Every exponent is 2^k - 1 (0 included).
bool is_spike(const Monomial& m);

/// All exponents positive.
bool is_positive_support(const Monomial& m);

/// The minimal spike of degree n in t variables, or nullopt when
/// mu(n) > t and no spike exists.
std::optional<Monomial> minimal_spike(std::size_t t, std::uint64_t n);

}  // namespace hitcalc

template <>
struct std::hash<hitcalc::Monomial> : hitcalc::MonomialHash {};
