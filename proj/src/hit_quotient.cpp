#include "hitcalc/hit_quotient.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include <fmt/format.h>

#include "hitcalc/arith.hpp"
#include "hitcalc/error.hpp"
#include "hitcalc/steenrod.hpp"

namespace hitcalc {

namespace {

constexpr std::size_t kBatchBytes = std::size_t{64} << 20;

unsigned full_mask(std::size_t t) { return (1u << t) - 1u; }

bool block_in_part(unsigned mask, std::size_t t, SupportPart part) {
  switch (part) {
    case SupportPart::all:
      return true;
    case SupportPart::zero:
      return mask != full_mask(t);
    case SupportPart::positive:
      return mask == full_mask(t);
  }
  return false;
}

// Monomials of degree `deg` whose support is exactly `mask`.
template <typename Fn>
void for_each_with_support(std::size_t t, std::uint64_t deg, unsigned mask, Fn&& fn) {
  std::size_t k = static_cast<std::size_t>(std::popcount(mask));
  if (k == 0) {
    if (deg == 0) fn(Monomial(t));
    return;
  }
  if (deg < k) return;
  std::array<std::size_t, kMaxVariables> slot{};
  std::size_t s = 0;
  for (std::size_t j = 0; j < t; ++j)
    if (mask >> j & 1u) slot[s++] = j;
  Monomial m(t);
  for_each_monomial(k, deg - k, [&](const Monomial& c) {
    for (std::size_t i = 0; i < k; ++i) m[slot[i]] = c[i] + 1;
    fn(static_cast<const Monomial&>(m));
  });
}

// Feeds the rows Sq^k(M), M of degree n - k supported on block b, into span.
void feed_family(EchelonSpan& span, const DegreeContext& ctx, std::size_t b, std::uint64_t k, unsigned threads) {
  const auto& block = ctx.blocks()[b];
  std::size_t cols = block.ranks.size();
  std::size_t chunk = std::max<std::size_t>(4096, kBatchBytes / (words_for(cols) * sizeof(Word)));
  BitMatrix batch(cols);
  BitRow row(cols);
  for_each_with_support(ctx.variables(), ctx.degree() - k, block.mask, [&](const Monomial& src) {
    std::fill(row.words().begin(), row.words().end(), 0);
    bool any = false;
    for_each_sq_term(k, src, [&](const Monomial& term) {
      std::size_t r = ctx.rank_of(term);
      if (ctx.block_of(r) != b)
        throw std::logic_error(fmt::format("Sq^{}({}) left its support block", k, src.to_string()));
      row.flip(ctx.index_in_block(r));
      any = true;
    });
    if (!any) return;
    batch.append_row(row);
    if (batch.rows() >= chunk) {
      span.insert_batch(std::move(batch), threads);
      batch = BitMatrix(cols);
    }
  });
  if (batch.rows() > 0) span.insert_batch(std::move(batch), threads);
}

}  // namespace

std::string_view to_string(SupportPart part) {
  switch (part) {
    case SupportPart::all:
      return "all";
    case SupportPart::zero:
      return "zero";
    case SupportPart::positive:
      return "positive";
  }
  return "all";
}

SupportPart parse_support_part(std::string_view text) {
  if (text == "all") return SupportPart::all;
  if (text == "zero" || text == "0") return SupportPart::zero;
  if (text == "positive" || text == ">0") return SupportPart::positive;
  throw InvalidArgument(fmt::format("unknown support part '{}'", text));
}

bool in_part(const Monomial& m, SupportPart part) {
  return block_in_part(m.support_mask(), m.variables(), part);
}

std::string HitTrace::render() const {
  std::string out = "[";
  for (std::size_t i = 0; i < families.size(); ++i) out += fmt::format("{}{}", i ? ", " : "", families[i].sources);
  out += "]\n";
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto& f = families[i];
    out += fmt::format("S{}\n", f.square);
    out += f.standalone_rank ? fmt::format("{}\n", *f.standalone_rank) : std::string("-\n");
    if (i > 0) out += fmt::format("{}\n", f.cumulative_rank);
  }
  out += fmt::format("\n{}\n{}\n{}\n", total_columns, total_rank, quotient_dim);
  return out;
}

unsigned threads_from_env() {
  const char* v = std::getenv("HITCALC_THREADS");
  if (!v) return 1;
  unsigned n = 0;
  auto [p, ec] = std::from_chars(v, v + std::strlen(v), n);
  if (ec != std::errc() || *p != '\0' || n == 0) return 1;
  return n;
}

std::size_t estimate_span_bytes(const DegreeContext& ctx) {
  std::size_t biggest = 0, total = 0;
  for (const auto& b : ctx.blocks()) {
    std::size_t bytes = b.ranks.size() * words_for(b.ranks.size()) * sizeof(Word);
    total += bytes;
    biggest = std::max(biggest, bytes);
  }
  // Finished spans, plus one block's working copy and a pending batch.
  return total + biggest + kBatchBytes;
}

bool HitSpan::is_pivot(std::size_t rank) const {
  return blocks_[ctx_->block_of(rank)].is_pivot(ctx_->index_in_block(rank));
}

BitRow HitSpan::reduce(const BitRow& row) const {
  if (row.size() != ctx_->size()) throw InvalidArgument("row width does not match the degree context");
  BitRow out(row.size());
  const auto& blocks = ctx_->blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& ranks = blocks[b].ranks;
    BitRow local(ranks.size());
    bool any = false;
    for (std::size_t i = 0; i < ranks.size(); ++i)
      if (row.test(ranks[i])) {
        local.set(i);
        any = true;
      }
    if (!any) continue;
    local = blocks_[b].reduce(local);
    for (std::size_t i : local.set_bits()) out.set(ranks[i]);
  }
  return out;
}

HitSpan build_hit_span(std::shared_ptr<const DegreeContext> ctx, const HitOptions& options) {
  std::size_t need = estimate_span_bytes(*ctx);
  if (need > options.max_memory)
    throw ResourceLimit(fmt::format("degree {} in {} variables needs about {} MiB (limit {} MiB)", ctx->degree(),
                                    ctx->variables(), need >> 20, options.max_memory >> 20));
  HitSpan hs;
  hs.ctx_ = ctx;
  const auto& blocks = ctx->blocks();
  for (const auto& b : blocks) hs.blocks_.emplace_back(b.ranks.size());
  hs.trace_.t = ctx->variables();
  hs.trace_.n = ctx->degree();
  hs.trace_.total_columns = ctx->size();

  auto report = [&](std::string_view stage, std::uint64_t k, std::size_t b, std::size_t rank) {
    if (options.progress) options.progress(Progress{stage, k, b + 1, blocks.size(), rank});
  };

  std::size_t n = ctx->degree();
  for (std::uint64_t k = 1; n > 0 && k <= n; k <<= 1) {
    FamilyTrace f;
    f.square = k;
    f.sources = monomial_count(ctx->variables(), n - k);
    if (options.standalone_ranks) {
      std::size_t standalone = 0;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        EchelonSpan fresh(blocks[b].ranks.size());
        feed_family(fresh, *ctx, b, k, options.threads);
        standalone += fresh.rank();
        report("standalone", k, b, standalone);
      }
      f.standalone_rank = standalone;
    }
    std::size_t cumulative = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      feed_family(hs.blocks_[b], *ctx, b, k, options.threads);
      cumulative += hs.blocks_[b].rank();
      report("cumulative", k, b, cumulative);
    }
    f.cumulative_rank = cumulative;
    hs.trace_.families.push_back(f);
  }
  std::size_t rank = 0;
  for (const auto& s : hs.blocks_) rank += s.rank();
  hs.trace_.total_rank = rank;
  hs.trace_.quotient_dim = ctx->size() - rank;
  return hs;
}

HitSpan hit_span(std::size_t t, std::uint64_t n, const HitOptions& options) {
  return build_hit_span(DegreeContext::build(t, n, options.column_cap), options);
}

QuotientBasis QuotientBasis::from_span(const HitSpan& span) {
  QuotientBasis qb;
  qb.ctx_ = span.context_ptr();
  const auto& ctx = *qb.ctx_;
  const auto& blocks = ctx.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& ranks = blocks[b].ranks;
    for (std::size_t c = 0; c < ranks.size(); ++c)
      if (!span.blocks()[b].is_pivot(c)) qb.admissible_ranks_.push_back(ranks[c]);
  }
  std::sort(qb.admissible_ranks_.begin(), qb.admissible_ranks_.end());
  qb.index_admissible();

  qb.reduction_offsets_.assign(ctx.size() + 1, 0);
  for (std::size_t r = 0; r < ctx.size(); ++r) {
    qb.reduction_offsets_[r] = static_cast<std::uint32_t>(qb.reduction_entries_.size());
    if (qb.index_of_rank_[r] >= 0) continue;
    std::size_t b = ctx.block_of(r);
    std::size_t c = ctx.index_in_block(r);
    const auto& es = span.blocks()[b];
    auto words = es.row(*es.pivot_row(c));
    const auto& ranks = blocks[b].ranks;
    std::size_t first = qb.reduction_entries_.size();
    for (std::size_t w = 0; w < words.size(); ++w) {
      Word x = words[w];
      while (x) {
        std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
        x &= x - 1;
        if (i == c) continue;
        std::int32_t a = qb.index_of_rank_[ranks[i]];
        if (a < 0) throw std::logic_error("echelon row touches another pivot");
        qb.reduction_entries_.push_back(static_cast<std::uint32_t>(a));
      }
    }
    std::sort(qb.reduction_entries_.begin() + static_cast<std::ptrdiff_t>(first), qb.reduction_entries_.end());
  }
  qb.reduction_offsets_[ctx.size()] = static_cast<std::uint32_t>(qb.reduction_entries_.size());
  qb.has_reduction_ = true;
  qb.trace_ = span.trace();
  return qb;
}

QuotientBasis QuotientBasis::all_hit(std::shared_ptr<const DegreeContext> ctx) {
  QuotientBasis qb;
  qb.ctx_ = std::move(ctx);
  qb.index_admissible();
  qb.reduction_offsets_.assign(qb.ctx_->size() + 1, 0);
  qb.has_reduction_ = true;
  return qb;
}

QuotientBasis QuotientBasis::from_admissible(std::shared_ptr<const DegreeContext> ctx,
                                             const std::vector<Monomial>& admissible) {
  QuotientBasis qb;
  qb.ctx_ = std::move(ctx);
  for (const auto& m : admissible) qb.admissible_ranks_.push_back(static_cast<std::uint32_t>(qb.ctx_->rank_of(m)));
  std::sort(qb.admissible_ranks_.begin(), qb.admissible_ranks_.end());
  if (std::adjacent_find(qb.admissible_ranks_.begin(), qb.admissible_ranks_.end()) != qb.admissible_ranks_.end())
    throw InvalidArgument("admissible list contains a duplicate monomial");
  qb.index_admissible();
  return qb;
}

void QuotientBasis::index_admissible() {
  index_of_rank_.assign(ctx_->size(), -1);
  admissible_.clear();
  for (std::size_t j = 0; j < admissible_ranks_.size(); ++j) {
    index_of_rank_[admissible_ranks_[j]] = static_cast<std::int32_t>(j);
    admissible_.push_back(ctx_->monomial(admissible_ranks_[j]));
  }
}

std::optional<std::size_t> QuotientBasis::admissible_index(const Monomial& m) const {
  auto r = ctx_->find(m);
  if (!r || index_of_rank_[*r] < 0) return std::nullopt;
  return static_cast<std::size_t>(index_of_rank_[*r]);
}

std::span<const std::uint32_t> QuotientBasis::reduction_of(std::size_t rank) const {
  if (!has_reduction_) throw Error("basis was loaded without reduction data");
  return {reduction_entries_.data() + reduction_offsets_[rank], reduction_offsets_[rank + 1] - reduction_offsets_[rank]};
}

void QuotientBasis::check_degree(const Polynomial& p) const {
  if (!has_reduction_) throw Error("basis was loaded without reduction data");
  if (p.variables() != ctx_->variables()) throw InvalidArgument("polynomial variable count does not match the basis");
  if (!p.is_zero() && p.homogeneous_degree() != ctx_->degree())
    throw InvalidArgument(fmt::format("polynomial of degree {} against a basis of degree {}", p.homogeneous_degree(),
                                      ctx_->degree()));
}

BitRow QuotientBasis::coordinates(const Polynomial& p) const {
  check_degree(p);
  BitRow out(dim());
  for (const auto& m : p.terms()) {
    std::size_t r = ctx_->rank_of(m);
    if (index_of_rank_[r] >= 0) {
      out.flip(static_cast<std::size_t>(index_of_rank_[r]));
      continue;
    }
    for (std::uint32_t a : reduction_of(r)) out.flip(a);
  }
  return out;
}

Polynomial QuotientBasis::reduce_to_admissible(const Polynomial& p) const {
  std::vector<Monomial> terms;
  for (std::size_t a : coordinates(p).set_bits()) terms.push_back(admissible_[a]);
  return Polynomial(ctx_->variables(), std::move(terms));
}

HitEngine::HitEngine(HitOptions options) : options_(std::move(options)) {}

std::shared_ptr<const DegreeContext> HitEngine::context(std::size_t t, std::uint64_t n) {
  auto key = std::make_pair(t, n);
  auto it = contexts_.find(key);
  if (it != contexts_.end()) return it->second;
  auto ctx = DegreeContext::build(t, n, options_.column_cap);
  contexts_.emplace(key, ctx);
  return ctx;
}

std::shared_ptr<const QuotientBasis> HitEngine::basis(std::size_t t, std::uint64_t n) {
  auto key = std::make_pair(t, n);
  auto it = bases_.find(key);
  if (it != bases_.end()) return it->second;
  auto ctx = context(t, n);
  std::shared_ptr<const QuotientBasis> qb;
  if (options_.wood_shortcut && arith::wood_trivial(static_cast<unsigned>(t), n)) {
    qb = std::make_shared<const QuotientBasis>(QuotientBasis::all_hit(ctx));
  } else {
    HitSpan span = build_hit_span(ctx, options_);
    ++eliminations_;
    qb = std::make_shared<const QuotientBasis>(QuotientBasis::from_span(span));
  }
  bases_.emplace(key, qb);
  return qb;
}

void HitEngine::install(std::shared_ptr<const QuotientBasis> basis) {
  auto key = std::make_pair(basis->context().variables(), basis->context().degree());
  contexts_.emplace(key, basis->context_ptr());
  bases_[key] = std::move(basis);
}

bool HitEngine::has_basis(std::size_t t, std::uint64_t n) const { return bases_.count({t, n}) > 0; }

std::size_t dim_q(HitEngine& engine, std::size_t t, std::uint64_t n) { return engine.basis(t, n)->dim(); }

std::shared_ptr<const QuotientBasis> admissible_basis(HitEngine& engine, std::size_t t, std::uint64_t n) {
  return engine.basis(t, n);
}

bool is_hit(HitEngine& engine, const Polynomial& p) {
  if (p.is_zero()) return true;
  return engine.basis(p.variables(), p.homogeneous_degree())->is_hit(p);
}

Polynomial reduce_to_admissible(HitEngine& engine, const Polynomial& p) {
  if (p.is_zero()) return p;
  return engine.basis(p.variables(), p.homogeneous_degree())->reduce_to_admissible(p);
}

std::vector<Monomial> admissible_of_weight(const QuotientBasis& qb, const WeightVector& w, SupportPart part) {
  std::vector<Monomial> out;
  const auto* wc = qb.context().weight_class(w);
  if (!wc) return out;
  for (std::size_t j = 0; j < qb.dim(); ++j) {
    std::size_t r = qb.admissible_rank(j);
    if (r >= wc->begin && r < wc->end && in_part(qb.admissible()[j], part)) out.push_back(qb.admissible()[j]);
  }
  return out;
}

std::size_t dim_q_omega(HitEngine& engine, std::size_t t, std::uint64_t n, const WeightVector& w, SupportPart part) {
  if (weight_degree(w) != n)
    throw InvalidArgument(fmt::format("weight ({}) has degree {}, not {}", w.to_string(), weight_degree(w), n));
  return admissible_of_weight(*engine.basis(t, n), w, part).size();
}

std::size_t dim_q_omega_modular(const HitSpan& span, const WeightVector& w, SupportPart part) {
  const auto& ctx = span.context();
  if (weight_degree(w) != ctx.degree())
    throw InvalidArgument(fmt::format("weight ({}) has degree {}, not {}", w.to_string(), weight_degree(w), ctx.degree()));
  const auto* wc = ctx.weight_class(w);
  if (!wc) return 0;
  std::size_t total = 0;
  for (std::size_t b = 0; b < ctx.blocks().size(); ++b) {
    const auto& block = ctx.blocks()[b];
    if (!block_in_part(block.mask, ctx.variables(), part)) continue;
    const auto& ranks = block.ranks;
    std::size_t lt = static_cast<std::size_t>(std::lower_bound(ranks.begin(), ranks.end(), wc->begin) - ranks.begin());
    std::size_t le = static_cast<std::size_t>(std::lower_bound(ranks.begin(), ranks.end(), wc->end) - ranks.begin());
    if (le == lt) continue;
    EchelonSpan s = span.blocks()[b];
    BitMatrix units(ranks.size());
    for (std::size_t i = 0; i < lt; ++i) units.append_zero_row()[i / kWordBits] |= Word{1} << (i % kWordBits);
    s.insert_batch(std::move(units));
    std::vector<std::size_t> cols(le);
    for (std::size_t i = 0; i < le; ++i) cols[i] = i;
    total += le - s.intersect_dim(cols);
  }
  return total;
}

std::uint64_t dim_q_zero_via_formula(std::size_t t, std::span<const std::uint64_t> positive_dims) {
  if (positive_dims.size() + 1 != t)
    throw InvalidArgument(fmt::format("expected {} positive dimensions, got {}", t - 1, positive_dims.size()));
  std::uint64_t total = 0;
  std::uint64_t c = 1;  // C(t, s)
  for (std::size_t s = 1; s < t; ++s) {
    c = c * (t - s + 1) / s;
    total += c * positive_dims[s - 1];
  }
  return total;
}

namespace {
void weight_rec(std::size_t t, std::uint64_t rem, std::vector<unsigned>& cur, std::vector<WeightVector>& out) {
  if (rem == 0) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned w = 0; w <= t && w <= rem; ++w) {
    if ((rem - w) % 2 != 0) continue;
    cur.push_back(w);
    weight_rec(t, (rem - w) / 2, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<WeightVector> weight_vectors_of_degree(std::size_t t, std::uint64_t n) {
  std::vector<WeightVector> out;
  std::vector<unsigned> cur;
  weight_rec(t, n, cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Monomial> kameko_down(const Monomial& m) {
  Monomial out(m.variables());
  for (std::size_t j = 0; j < m.variables(); ++j) {
    if (m[j] % 2 == 0) return std::nullopt;
    out[j] = (m[j] - 1) / 2;
  }
  return out;
}

KamekoReport kameko(HitEngine& engine, std::size_t t, std::uint64_t n_low, const KamekoOptions& options) {
  KamekoReport rep;
  rep.t = t;
  rep.n_low = n_low;
  rep.n_high = t + 2 * n_low;
  if (options.iso_shortcut && arith::kameko_iso(static_cast<unsigned>(t), n_low)) {
    rep.iso_shortcut = true;
    return rep;
  }
  auto high = engine.basis(t, rep.n_high);
  auto low = engine.basis(t, n_low);
  rep.dim_high = high->dim();
  rep.dim_low = low->dim();
  if (rep.dim_low > rep.dim_high) throw std::logic_error("Kameko map cannot be onto");
  rep.kernel_dim = rep.dim_high - rep.dim_low;

  if (options.explicit_matrix) {
    auto image = [&](const Monomial& m) {
      auto d = kameko_down(m);
      return d ? low->coordinates(Polynomial(*d)) : BitRow(low->dim());
    };
    std::vector<BitRow> columns;
    columns.reserve(high->dim());
    for (const auto& a : high->admissible()) columns.push_back(image(a));
    rep.image_rank = rank_of(columns);
    bool ok = true;
    const auto& ctx = high->context();
    for (std::size_t r = 0; r < ctx.size() && ok; ++r) {
      if (high->admissible_index(ctx.monomial(r))) continue;
      BitRow lhs = image(ctx.monomial(r));
      for (std::uint32_t a : high->reduction_of(r)) lhs ^= columns[a];
      ok = lhs.is_zero();
    }
    rep.well_defined = ok;
  }

  if (options.split) {
    std::map<WeightVector, std::size_t> positive;
    for (const auto& a : high->admissible()) {
      if (!is_positive_support(a)) {
        ++rep.split_zero;
        continue;
      }
      WeightVector w = weight_vector(a);
      if (w[0] != t) ++positive[w];
    }
    for (auto& [w, d] : positive) rep.split_positive.push_back({w, d});
  }
  return rep;
}

std::size_t kameko_kernel_dim(HitEngine& engine, std::size_t t, std::uint64_t n_low) {
  KamekoOptions opts;
  opts.iso_shortcut = false;
  return kameko(engine, t, n_low, opts).kernel_dim;
}

bool singer_zero(const Monomial& m) {
  std::size_t t = m.variables();
  std::uint64_t n = m.degree();
  auto z = minimal_spike(t, n);
  if (!z) throw InvalidArgument(fmt::format("no spike of degree {} in {} variables", n, t));
  return weight_vector(m) < weight_vector(*z);
}

bool ks_criterion(HitEngine& engine, const Monomial& x, const Monomial& y, unsigned s) {
  if (x.variables() != y.variables()) throw InvalidArgument("ks_criterion: variable counts differ");
  if (s == 0) throw InvalidArgument("ks_criterion: s must be positive");
  if (weight_vector(x).size() > s) return false;
  return !engine.basis(y.variables(), y.degree())->is_admissible(y);
}

}  // namespace hitcalc
