#include "hitcalc/degree_context.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include <fmt/format.h>

#include "hitcalc/error.hpp"

namespace hitcalc {

std::size_t monomial_count(std::size_t t, std::uint64_t n) {
  if (t == 0) return n == 0 ? 1 : 0;
  // C(n + t - 1, t - 1) computed incrementally; each prefix is an integer.
  unsigned __int128 c = 1;
  for (std::size_t k = 1; k < t; ++k) {
    c = c * (n + k) / k;
    if (c > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(c);
}

std::shared_ptr<const DegreeContext> DegreeContext::build(std::size_t t, std::uint64_t n, std::size_t column_cap) {
  if (t == 0 || t > kMaxVariables) throw InvalidArgument(fmt::format("variable count {} out of range", t));
  std::size_t count = monomial_count(t, n);
  if (count > column_cap)
    throw ResourceLimit(fmt::format("degree {} in {} variables needs {} columns (cap {})", n, t, count, column_cap));

  std::shared_ptr<DegreeContext> ctx(new DegreeContext());
  ctx->t_ = t;
  ctx->n_ = n;
  ctx->binom_.assign(n + t + 1, std::vector<std::size_t>(t, 0));
  for (std::size_t a = 0; a < ctx->binom_.size(); ++a) {
    ctx->binom_[a][0] = 1;
    for (std::size_t b = 1; b < t && b <= a; ++b) ctx->binom_[a][b] = ctx->binom_[a - 1][b - 1] + ctx->binom_[a - 1][b];
  }

  ctx->monomials_.reserve(count);
  for_each_monomial(t, n, [&](const Monomial& m) { ctx->monomials_.push_back(m); });
  // monomials_ is in lex order here, so position = lex index.
  std::vector<std::uint32_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = static_cast<std::uint32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return compare(ctx->monomials_[a], ctx->monomials_[b]) < 0;
  });
  std::vector<Monomial> sorted(count);
  ctx->lex_to_rank_.resize(count);
  for (std::size_t r = 0; r < count; ++r) {
    sorted[r] = ctx->monomials_[order[r]];
    ctx->lex_to_rank_[order[r]] = static_cast<std::uint32_t>(r);
  }
  ctx->monomials_ = std::move(sorted);

  ctx->weight_id_.resize(count);
  for (std::size_t r = 0; r < count; ++r) {
    WeightVector w = weight_vector(ctx->monomials_[r]);
    if (ctx->weights_.empty() || ctx->weights_.back().weight != w) ctx->weights_.push_back({std::move(w), r, r});
    ctx->weights_.back().end = r + 1;
    ctx->weight_id_[r] = static_cast<std::uint32_t>(ctx->weights_.size() - 1);
  }

  std::map<unsigned, std::size_t> block_index;
  ctx->block_id_.resize(count);
  ctx->index_in_block_.resize(count);
  for (std::size_t r = 0; r < count; ++r) {
    unsigned mask = ctx->monomials_[r].support_mask();
    auto [it, inserted] = block_index.try_emplace(mask, ctx->blocks_.size());
    if (inserted) ctx->blocks_.push_back({mask, {}});
    auto& block = ctx->blocks_[it->second];
    ctx->block_id_[r] = static_cast<std::uint32_t>(it->second);
    ctx->index_in_block_[r] = static_cast<std::uint32_t>(block.ranks.size());
    block.ranks.push_back(static_cast<std::uint32_t>(r));
  }
  return ctx;
}

std::size_t DegreeContext::lex_index(const Monomial& m) const {
  // Compositions of `rem` into p parts: C(rem + p - 1, p - 1). Those with a
  // first part below a number C(rem + p, p) - C(rem - a + p, p) of them,
  // where p counts the parts after the current one.
  std::size_t idx = 0;
  std::uint64_t rem = n_;
  for (std::size_t j = 0; j + 1 < t_; ++j) {
    std::size_t p = t_ - j - 1;
    std::uint64_t a = m[j];
    auto choose = [&](std::uint64_t x) { return binom_[x + p][p]; };
    idx += choose(rem) - choose(rem - a);
    rem -= a;
  }
  return idx;
}

std::optional<std::size_t> DegreeContext::find(const Monomial& m) const {
  if (m.variables() != t_ || m.degree() != n_) return std::nullopt;
  return lex_to_rank_[lex_index(m)];
}

std::size_t DegreeContext::rank_of(const Monomial& m) const {
  auto r = find(m);
  if (!r) throw InvalidArgument(fmt::format("monomial ({}) is not of degree {} in {} variables", m.to_string(), n_, t_));
  return *r;
}

const DegreeContext::WeightClass* DegreeContext::weight_class(const WeightVector& w) const {
  auto it = std::lower_bound(weights_.begin(), weights_.end(), w,
                             [](const WeightClass& c, const WeightVector& v) { return c.weight < v; });
  if (it == weights_.end() || it->weight != w) return nullptr;
  return &*it;
}

BitRow DegreeContext::to_row(const Polynomial& p) const {
  if (p.variables() != t_) throw InvalidArgument("polynomial variable count does not match context");
  BitRow row(size());
  for (const auto& m : p.terms()) row.flip(rank_of(m));
  return row;
}

Polynomial DegreeContext::to_polynomial(const BitRow& row) const {
  std::vector<Monomial> terms;
  for (std::size_t r : row.set_bits()) terms.push_back(monomials_[r]);
  return Polynomial(t_, std::move(terms));
}

}  // namespace hitcalc
