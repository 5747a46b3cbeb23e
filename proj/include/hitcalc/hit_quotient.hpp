#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hitcalc/degree_context.hpp"
#include "hitcalc/f2_linalg.hpp"
#include "hitcalc/monomial.hpp"
#include "hitcalc/polynomial.hpp"

namespace hitcalc {

enum class SupportPart { all, zero, positive };

std::string_view to_string(SupportPart part);
SupportPart parse_support_part(std::string_view text);
/// Does m belong to the given support part (positive = every variable occurs)?
bool in_part(const Monomial& m, SupportPart part);

struct FamilyTrace {
  std::uint64_t square = 0;   // 2^i
  std::size_t sources = 0;    // monomials of degree n - 2^i
  std::optional<std::size_t> standalone_rank;
  std::size_t cumulative_rank = 0;
};

struct HitTrace {
  std::size_t t = 0;
  std::uint64_t n = 0;
  std::vector<FamilyTrace> families;
  std::size_t total_columns = 0;
  std::size_t total_rank = 0;
  std::size_t quotient_dim = 0;

  /// Plain-text echo in the print order of the classic MAGMA session:
  /// source counts, then per family its rank and the running total.
  std::string render() const;
};

struct Progress {
  std::string_view stage;
  std::uint64_t square = 0;
  std::size_t block = 0;
  std::size_t blocks = 0;
  std::size_t rank = 0;
};

struct HitOptions {
  /// Also eliminate each family on its own (doubles the work).
  bool standalone_ranks = false;
  /// Skip elimination when mu(n) > t.
  bool wood_shortcut = true;
  std::size_t column_cap = kDefaultColumnCap;
  std::size_t max_memory = std::size_t{2} << 30;
  unsigned threads = 1;
  std::function<void(const Progress&)> progress;
};

/// HITCALC_THREADS, or 1 when unset or invalid.
unsigned threads_from_env();

/// Bytes the echelon spans of one degree may need at peak.
std::size_t estimate_span_bytes(const DegreeContext& ctx);

/// The hit subspace sum_i Im Sq^{2^i} of one degree, stored as one echelon
/// span per support block in block-local column numbering.
class HitSpan {
 public:
  const DegreeContext& context() const { return *ctx_; }
  std::shared_ptr<const DegreeContext> context_ptr() const { return ctx_; }
  const HitTrace& trace() const { return trace_; }
  std::size_t rank() const { return trace_.total_rank; }
  const std::vector<EchelonSpan>& blocks() const { return blocks_; }

  bool is_pivot(std::size_t rank) const;
  /// Residual of a full-width row modulo the hit span.
  BitRow reduce(const BitRow& row) const;
  bool contains(const BitRow& row) const { return reduce(row).is_zero(); }

 private:
  friend HitSpan build_hit_span(std::shared_ptr<const DegreeContext>, const HitOptions&);
  std::shared_ptr<const DegreeContext> ctx_;
  std::vector<EchelonSpan> blocks_;
  HitTrace trace_;
};

/// Generator families Sq^{2^i} for every 2^i <= n, inserted in ascending i.
HitSpan build_hit_span(std::shared_ptr<const DegreeContext> ctx, const HitOptions& options = {});
HitSpan hit_span(std::size_t t, std::uint64_t n, const HitOptions& options = {});

/// Admissible monomials of one degree and, unless built from a bare list,
/// the data needed to rewrite any polynomial in admissible coordinates.
class QuotientBasis {
 public:
  static QuotientBasis from_span(const HitSpan& span);
  /// Every monomial hit (used when mu(n) > t).
  static QuotientBasis all_hit(std::shared_ptr<const DegreeContext> ctx);
  /// Basis only, e.g. loaded from a cache file; coordinate queries throw.
  static QuotientBasis from_admissible(std::shared_ptr<const DegreeContext> ctx, const std::vector<Monomial>& admissible);

  const DegreeContext& context() const { return *ctx_; }
  std::shared_ptr<const DegreeContext> context_ptr() const { return ctx_; }
  std::size_t dim() const { return admissible_.size(); }
  std::size_t hit_rank() const { return ctx_->size() - admissible_.size(); }
  const std::vector<Monomial>& admissible() const { return admissible_; }
  std::size_t admissible_rank(std::size_t j) const { return admissible_ranks_[j]; }
  const std::optional<HitTrace>& trace() const { return trace_; }
  bool has_reduction() const { return has_reduction_; }

  std::optional<std::size_t> admissible_index(const Monomial& m) const;
  bool is_admissible(const Monomial& m) const { return admissible_index(m).has_value(); }

  /// [p] in admissible coordinates, as a bit vector of length dim().
  BitRow coordinates(const Polynomial& p) const;
  /// The admissible monomials whose sum is congruent to p.
  Polynomial reduce_to_admissible(const Polynomial& p) const;
  bool is_hit(const Polynomial& p) const { return coordinates(p).is_zero(); }

  /// For an inadmissible monomial of rank r, the admissible indices of the
  /// smaller monomials it is congruent to.
  std::span<const std::uint32_t> reduction_of(std::size_t rank) const;

 private:
  QuotientBasis() = default;
  void index_admissible();
  void check_degree(const Polynomial& p) const;

  std::shared_ptr<const DegreeContext> ctx_;
  std::vector<Monomial> admissible_;
  std::vector<std::uint32_t> admissible_ranks_;
  std::vector<std::int32_t> index_of_rank_;
  std::vector<std::uint32_t> reduction_offsets_;
  std::vector<std::uint32_t> reduction_entries_;
  bool has_reduction_ = false;
  std::optional<HitTrace> trace_;
};

/// Session-level memo of contexts and quotient bases.
class HitEngine {
 public:
  explicit HitEngine(HitOptions options = {});

  HitOptions& options() { return options_; }
  const HitOptions& options() const { return options_; }

  std::shared_ptr<const DegreeContext> context(std::size_t t, std::uint64_t n);
  std::shared_ptr<const QuotientBasis> basis(std::size_t t, std::uint64_t n);
  /// Adopt a basis computed elsewhere (e.g. loaded from disk).
  void install(std::shared_ptr<const QuotientBasis> basis);
  bool has_basis(std::size_t t, std::uint64_t n) const;
  /// Number of eliminations actually run.
  std::size_t eliminations() const { return eliminations_; }

 private:
  HitOptions options_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::shared_ptr<const DegreeContext>> contexts_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::shared_ptr<const QuotientBasis>> bases_;
  std::size_t eliminations_ = 0;
};

std::size_t dim_q(HitEngine& engine, std::size_t t, std::uint64_t n);
std::shared_ptr<const QuotientBasis> admissible_basis(HitEngine& engine, std::size_t t, std::uint64_t n);
bool is_hit(HitEngine& engine, const Polynomial& p);
Polynomial reduce_to_admissible(HitEngine& engine, const Polynomial& p);

/// Admissible monomials of weight exactly w in the given support part.
std::vector<Monomial> admissible_of_weight(const QuotientBasis& qb, const WeightVector& w, SupportPart part);
std::size_t dim_q_omega(HitEngine& engine, std::size_t t, std::uint64_t n, const WeightVector& w,
                        SupportPart part = SupportPart::all);
/// Same number via dim P^{<=w} - dim((hit + P^{<w}) ∩ P^{<=w}), block by block.
std::size_t dim_q_omega_modular(const HitSpan& span, const WeightVector& w, SupportPart part = SupportPart::all);

/// sum_s C(t, s) positive_dims[s-1] for s = 1..t-1.
std::uint64_t dim_q_zero_via_formula(std::size_t t, std::span<const std::uint64_t> positive_dims);

/// Every sequence w with sum 2^(j-1) w_j = n and 0 <= w_j <= t, ascending.
std::vector<WeightVector> weight_vectors_of_degree(std::size_t t, std::uint64_t n);

/// prod x_j^{(a_j - 1)/2} when every a_j is odd, else nullopt (zero).
std::optional<Monomial> kameko_down(const Monomial& m);

struct KamekoSplitEntry {
  WeightVector weight;
  std::size_t dim = 0;
};

struct KamekoReport {
  std::size_t t = 0;
  std::uint64_t n_low = 0;
  std::uint64_t n_high = 0;
  bool iso_shortcut = false;
  std::size_t dim_high = 0;
  std::size_t dim_low = 0;
  std::size_t kernel_dim = 0;
  /// Rank of the induced matrix on admissible bases, when requested.
  std::optional<std::size_t> image_rank;
  /// Whether the induced map respects every reduction relation.
  std::optional<bool> well_defined;
  /// Kernel accounting: zero-support part plus positive parts by weight
  /// (weights whose first entry is below t).
  std::size_t split_zero = 0;
  std::vector<KamekoSplitEntry> split_positive;
};

struct KamekoOptions {
  bool explicit_matrix = false;
  bool split = false;
  /// Report the isomorphism without eliminating when mu(t + 2n) = t.
  bool iso_shortcut = true;
};

KamekoReport kameko(HitEngine& engine, std::size_t t, std::uint64_t n_low, const KamekoOptions& options = {});
std::size_t kameko_kernel_dim(HitEngine& engine, std::size_t t, std::uint64_t n_low);

/// w(m) < w(minimal spike of deg m); true implies m is hit.
/// Throws InvalidArgument when mu(deg m) > t.
bool singer_zero(const Monomial& m);

/// True when w_j(x) = 0 for every j > s and y is inadmissible; then
/// x y^{2^s} is inadmissible.
bool ks_criterion(HitEngine& engine, const Monomial& x, const Monomial& y, unsigned s);

}  // namespace hitcalc
