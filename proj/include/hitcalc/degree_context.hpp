#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hitcalc/f2_linalg.hpp"
#include "hitcalc/monomial.hpp"
#include "hitcalc/polynomial.hpp"

namespace hitcalc {

inline constexpr std::size_t kDefaultColumnCap = 2'000'000;

/// C(n + t - 1, t - 1): monomials of degree n in t variables. Saturates at
/// SIZE_MAX on overflow.
std::size_t monomial_count(std::size_t t, std::uint64_t n);

/// Calls fn(m) for every monomial of degree n in t variables, in
/// left-lexicographic exponent order.
template <typename Fn>
void for_each_monomial(std::size_t t, std::uint64_t n, Fn&& fn);

/// All monomials of degree n in t variables, ranked by the monomial order.
class DegreeContext {
 public:
  struct WeightClass {
    WeightVector weight;
    std::size_t begin;  // first rank
    std::size_t end;    // one past the last rank
  };

  /// Monomials sharing one support set. Steenrod squares never change the
  /// support, so the hit space splits along these blocks.
  struct Block {
    unsigned mask;
    std::vector<std::uint32_t> ranks;  // ascending
  };

  static std::shared_ptr<const DegreeContext> build(std::size_t t, std::uint64_t n,
                                                    std::size_t column_cap = kDefaultColumnCap);

  std::size_t variables() const { return t_; }
  std::uint64_t degree() const { return n_; }
  std::size_t size() const { return monomials_.size(); }

  const Monomial& monomial(std::size_t rank) const { return monomials_[rank]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Rank of m, or nullopt when m has a different degree or variable count.
  std::optional<std::size_t> find(const Monomial& m) const;
  /// Rank of m; throws InvalidArgument when m is not in this context.
  std::size_t rank_of(const Monomial& m) const;

  const std::vector<WeightClass>& weight_classes() const { return weights_; }
  const WeightClass* weight_class(const WeightVector& w) const;
  const WeightVector& weight(std::size_t rank) const { return weights_[weight_id_[rank]].weight; }

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t rank) const { return block_id_[rank]; }
  std::size_t index_in_block(std::size_t rank) const { return index_in_block_[rank]; }

  BitRow to_row(const Polynomial& p) const;
  Polynomial to_polynomial(const BitRow& row) const;

 private:
  DegreeContext() = default;
  std::size_t lex_index(const Monomial& m) const;

  std::size_t t_ = 0;
  std::uint64_t n_ = 0;
  std::vector<Monomial> monomials_;
  std::vector<std::uint32_t> lex_to_rank_;
  std::vector<std::vector<std::size_t>> binom_;  // binom_[a][b] for b < t
  std::vector<WeightClass> weights_;
  std::vector<std::uint32_t> weight_id_;
  std::vector<Block> blocks_;
  std::vector<std::uint32_t> block_id_;
  std::vector<std::uint32_t> index_in_block_;
};

namespace detail {
template <typename Fn>
void for_each_monomial_rec(Monomial& m, std::size_t j, std::uint64_t remaining, Fn& fn) {
  std::size_t t = m.variables();
  if (j + 1 == t) {
    m[j] = static_cast<Exponent>(remaining);
    fn(static_cast<const Monomial&>(m));
    return;
  }
  for (std::uint64_t a = 0; a <= remaining; ++a) {
    m[j] = static_cast<Exponent>(a);
    for_each_monomial_rec(m, j + 1, remaining - a, fn);
  }
}
}  // namespace detail

template <typename Fn>
void for_each_monomial(std::size_t t, std::uint64_t n, Fn&& fn) {
  Monomial m(t);
  detail::for_each_monomial_rec(m, 0, n, fn);
}

}  // namespace hitcalc
