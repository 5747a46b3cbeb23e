#include "hitcalc/verify.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include <fmt/format.h>

#include "hitcalc/arith.hpp"
#include "hitcalc/error.hpp"
#include "hitcalc/invariants.hpp"
#include "hitcalc/steenrod.hpp"
#include "hitcalc/struct_maps.hpp"

namespace hitcalc {

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

namespace {

class Runner {
 public:
  Runner(SuiteReport& report, const std::function<void(const CheckResult&)>& sink) : report_(report), sink_(sink) {}
  Runner(const Runner&) = delete;

  template <typename T>
  void equal(std::string name, const T& expected, const T& actual) {
    push({std::move(name), fmt::format("{}", expected), fmt::format("{}", actual), expected == actual});
  }

  void holds(std::string name, bool ok, std::string detail = {}) {
    push({std::move(name), "holds", ok ? "holds" : (detail.empty() ? "fails" : detail), ok});
  }

  // Runs fn, turning an exception into a failed check.
  template <typename Fn>
  void guarded(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      push({name, "no error", e.what(), false});
    }
  }

 private:
  void push(CheckResult r) {
    report_.checks.push_back(r);
    if (sink_) sink_(report_.checks.back());
  }
  SuiteReport& report_;
  const std::function<void(const CheckResult&)>& sink_;
};

Monomial mono(std::initializer_list<Exponent> e) { return Monomial(e); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t t, std::uint64_t deg) {
  Monomial m(t);
  for (std::uint64_t i = 0; i < deg; ++i) ++m[std::uniform_int_distribution<std::size_t>(0, t - 1)(rng)];
  return m;
}

// Least number of parts 2^d - 1 summing to n, by dynamic programming.
std::vector<unsigned> mu_table(std::size_t limit) {
  std::vector<unsigned> best(limit + 1, ~0u);
  best[0] = 0;
  for (std::size_t v = 1; v <= limit; ++v)
    for (std::size_t p = 1; p <= v; p = 2 * p + 1)
      if (best[v - p] != ~0u) best[v] = std::min(best[v], best[v - p] + 1);
  return best;
}

// Reduced row echelon form by plain Gaussian elimination on bool rows,
// pivot = highest column, rows sorted by decreasing pivot.
std::vector<std::vector<bool>> dense_rref(std::vector<std::vector<bool>> rows, std::size_t cols) {
  std::vector<std::vector<bool>> out;
  for (std::size_t c = cols; c-- > 0;) {
    auto it = std::find_if(rows.begin(), rows.end(), [c](const auto& r) { return r[c]; });
    if (it == rows.end()) continue;
    std::vector<bool> p = *it;
    rows.erase(it);
    auto clear = [&](std::vector<bool>& r) {
      if (!r[c]) return;
      for (std::size_t k = 0; k < cols; ++k) r[k] = r[k] != p[k];
    };
    for (auto& r : rows) clear(r);
    for (auto& r : out) clear(r);
    out.push_back(std::move(p));
  }
  return out;
}

void arithmetic_checks(Runner& run) {
  run.equal("alpha(70)", 3u, arith::alpha(70));
  run.equal("mu(67)", 3u, arith::mu(67));
  run.equal("mu(139)", 5u, arith::mu(139));
  run.equal("mu(14)", 2u, arith::mu(14));
  run.equal("generic_degree(3,1,2)", std::uint64_t{13}, arith::generic_degree({3, 1, 2}));
  run.equal("generic_degree(5,13,1)", std::uint64_t{31}, arith::generic_degree({5, 13, 1}));
  run.equal("kameko_iso(5,139)", true, arith::kameko_iso(5, 139));
  run.equal("validate_dlP(6,47)", true, arith::validate_dlP(6, 47));
  run.equal("validate_dlP(6,67)", true, arith::validate_dlP(6, 67));
  run.equal("sum_phuc_dimension(6,1894)", std::uint64_t{119322}, arith::sum_phuc_dimension(6, 1894));
  auto table = mu_table(10000);
  bool ok = true;
  std::uint64_t bad = 0;
  for (std::uint64_t n = 0; n <= 10000 && ok; ++n)
    if (arith::mu(n) != table[n]) ok = false, bad = n;
  run.holds("mu agrees with partition search for n <= 10000", ok, fmt::format("differs at {}", bad));
}

void monomial_checks(Runner& run) {
  run.equal("weight of (12 6 9)", std::string("1,1,2,2"), weight_vector(mono({12, 6, 9})).to_string());
  run.equal("weight_degree(3,2,2,2)", std::uint64_t{31}, weight_degree(WeightVector{3, 2, 2, 2}));
  run.equal("weight_degree(2,1,1,1,1)", std::uint64_t{32}, weight_degree(WeightVector{2, 1, 1, 1, 1}));
  run.holds("x1 x2^2 x3^4 x4^8 x5^16 < x1^2 x2 x3^4 x4^8 x5^16",
            compare(mono({1, 2, 4, 8, 16}), mono({2, 1, 4, 8, 16})) < 0);
  run.equal("minimal spike (5,31)", std::string("31 0 0 0 0"), minimal_spike(5, 31)->to_string());
  run.equal("minimal spike (5,32)", std::string("31 1 0 0 0"), minimal_spike(5, 32)->to_string());
  run.equal("minimal spike (5,14)", std::string("7 7 0 0 0"), minimal_spike(5, 14)->to_string());
}

void steenrod_checks(Runner& run) {
  run.equal("Sq^2(x1^7 x2^8 x3^4 x4^8)", std::string("9 8 4 8"), sq_monomial(2, mono({7, 8, 4, 8})).to_string());
  run.equal("Sq^2(x1^12 x2^6 x3^9)", std::string("12 8 9"), sq_monomial(2, mono({12, 6, 9})).to_string());

  std::mt19937_64 rng(20240531);
  bool cartan = true;
  for (int trial = 0; trial < 300 && cartan; ++trial) {
    std::size_t t = 1 + trial % 5;
    Monomial a = random_monomial(rng, t, rng() % 7);
    Monomial b = random_monomial(rng, t, rng() % 6);
    std::uint64_t k = rng() % 9;
    Polynomial lhs = sq(k, Polynomial(a) * Polynomial(b));
    Polynomial rhs(t);
    for (std::uint64_t i = 0; i <= k; ++i) rhs += sq_monomial(i, a) * sq_monomial(k - i, b);
    cartan = lhs == rhs;
  }
  run.holds("Cartan formula on random products", cartan);

  bool unstable = true, adem = true;
  for (std::size_t t = 1; t <= 3; ++t)
    for (std::uint64_t d = 0; d <= 10; ++d)
      for_each_monomial(t, d, [&](const Monomial& m) {
        Polynomial p(m);
        if (sq_monomial(d, m) != p * p || !sq_monomial(d + 1, m).is_zero()) unstable = false;
        if (!sq(1, sq_monomial(1, m)).is_zero()) adem = false;
        if (sq(1, sq_monomial(2, m)) != sq_monomial(3, m)) adem = false;
      });
  run.holds("instability Sq^deg(x) = x^2, Sq^k(x) = 0 above", unstable);
  run.holds("Adem Sq1Sq1 = 0 and Sq1Sq2 = Sq3", adem);
}

void linalg_checks(Runner& run) {
  std::mt19937_64 rng(7);
  bool ok = true;
  for (int trial = 0; trial < 40 && ok; ++trial) {
    std::size_t cols = 1 + rng() % 500;
    std::size_t nrows = rng() % 120;
    double density = (1 + rng() % 30) / 100.0;
    std::bernoulli_distribution bit(density);
    std::vector<std::vector<bool>> dense;
    BitMatrix batch(cols);
    EchelonSpan single(cols);
    for (std::size_t i = 0; i < nrows; ++i) {
      std::vector<bool> r(cols);
      BitRow br(cols);
      for (std::size_t c = 0; c < cols; ++c)
        if (bit(rng)) r[c] = true, br.set(c);
      dense.push_back(r);
      batch.append_row(br);
      single.insert(br);
    }
    EchelonSpan span(cols);
    span.insert_batch(std::move(batch));
    auto oracle = dense_rref(dense, cols);
    if (span.rank() != oracle.size() || single.rank() != oracle.size()) ok = false;
    for (std::size_t i = 0; ok && i < oracle.size(); ++i) {
      BitRow a = span.row_copy(i), b = single.row_copy(i);
      for (std::size_t c = 0; c < cols; ++c)
        if (a.test(c) != oracle[i][c] || b.test(c) != oracle[i][c]) ok = false;
    }
  }
  run.holds("echelon engine matches dense RREF (<= 500 columns)", ok);
}

void order_independence_check(Runner& run, HitEngine& engine) {
  auto ctx = engine.context(4, 13);
  std::vector<BitRow> rows;
  for (std::uint64_t k = 1; k <= 13; k <<= 1)
    for_each_monomial(4, 13 - k, [&](const Monomial& m) { rows.push_back(ctx->to_row(sq_monomial(k, m))); });
  std::mt19937_64 rng(99);
  bool ok = true;
  std::size_t expected = ctx->size() - engine.basis(4, 13)->dim();
  for (int trial = 0; trial < 3 && ok; ++trial) {
    std::shuffle(rows.begin(), rows.end(), rng);
    ok = rank_of(rows) == expected;
  }
  run.holds("hit rank independent of generator order (4,13)", ok);
}

// True when m occurs as a term of Sq^k(y) for some monomial y and k = 2^i > 0.
bool has_sq_preimage(const Monomial& m) {
  const std::size_t t = m.variables();
  for (std::uint64_t k = 1; k <= m.degree(); k <<= 1) {
    bool found = false;
    Monomial y(t);
    std::function<void(std::size_t, std::uint64_t)> split = [&](std::size_t j, std::uint64_t left) {
      if (found) return;
      if (j == t) {
        found = left == 0;
        return;
      }
      for (std::uint64_t i = 0; i <= std::min<std::uint64_t>(left, m[j]); ++i) {
        y[j] = static_cast<Exponent>(m[j] - i);
        if (arith::binom_mod2(y[j], i)) split(j + 1, left - i);
      }
    };
    split(0, k);
    if (found) return true;
  }
  return false;
}

void spike_checks(Runner& run, HitEngine& engine, std::uint64_t max_n, std::uint64_t engine_n_t5) {
  bool ok = true;
  std::string bad;
  for (std::size_t t = 1; t <= 5 && ok; ++t)
    for (std::uint64_t n = 0; n <= (t == 5 ? engine_n_t5 : max_n) && ok; ++n) {
      auto qb = engine.basis(t, n);
      for_each_monomial(t, n, [&](const Monomial& m) {
        if (ok && is_spike(m) && !qb->is_admissible(m)) ok = false, bad = m.to_string();
      });
    }
  run.holds(fmt::format("spikes in admissible bases (t <= 4, n <= {}; t = 5, n <= {})", max_n, engine_n_t5), ok, bad);
  ok = true;
  for (std::size_t t = 1; t <= 5; ++t)
    for (std::uint64_t n = 0; n <= max_n; ++n)
      for_each_monomial(t, n, [&](const Monomial& m) {
        if (ok && is_spike(m) && has_sq_preimage(m)) ok = false, bad = m.to_string();
      });
  run.holds(fmt::format("spikes never occur in Sq^k images (t <= 5, n <= {})", max_n), ok, bad);
}

void singer_checks(Runner& run, HitEngine& engine) {
  bool ok = true;
  std::string bad;
  for (std::size_t t = 1; t <= 4; ++t)
    for (std::uint64_t n = 1; n <= 15; ++n) {
      if (arith::wood_trivial(static_cast<unsigned>(t), n)) continue;
      auto qb = engine.basis(t, n);
      for_each_monomial(t, n, [&](const Monomial& m) {
        if (ok && singer_zero(m) && !qb->is_hit(Polynomial(m))) ok = false, bad = m.to_string();
      });
    }
  run.holds("Singer criterion implies hit (t <= 4, n <= 15)", ok, bad);
}

void map_checks(Runner& run, HitEngine& engine) {
  PsiSpec spec{1, {2, 3, 4}};
  run.equal("psi_(1,(2,3,4))(x1^12 x2^6 x3^9)", std::string("7 8 4 8"), psi(spec, mono({12, 6, 9}))->to_string());
  run.equal("q_(1,4)(x1^12 x2^6 x3^9)", std::string("0 12 6 9"), q_insert(1, 4, mono({12, 6, 9})).to_string());
  run.equal("p_(4,(5))(x1 x2^2 x3^4 x4^8 x5^16)", std::string("1 2 4 24"),
            p_project(4, {5}, Polynomial(mono({1, 2, 4, 8, 16}))).to_string());
  Polynomial lhs = sq(2, Polynomial(*psi(spec, mono({12, 6, 9}))));
  Polynomial rhs = psi(spec, sq_monomial(2, mono({12, 6, 9})));
  run.holds("psi does not commute with Sq^2 (witness x1^9 x2^8 x3^4 x4^8)",
            lhs.to_string() == "9 8 4 8" && lhs != rhs);

  bool weight_ok = true;
  for (std::uint64_t n : {7u, 11u, 13u}) {
    auto qb = engine.basis(4, n);
    for (const auto& s : all_psi_specs(5))
      for (const auto& m : qb->admissible())
        if (auto img = psi(s, m); img && weight_vector(*img) != weight_vector(m)) weight_ok = false;
  }
  run.holds("psi and q preserve weight vectors", weight_ok);

  bool commute = true;
  for (std::uint64_t d = 0; d <= 8; ++d)
    for_each_monomial(3, d, [&](const Monomial& m) {
      for (unsigned l = 1; l <= 4; ++l)
        for (std::uint64_t k = 0; k <= 8; ++k) {
          std::vector<Monomial> mapped;
          Polynomial image = sq_monomial(k, m);
          for (const auto& term : image.terms()) mapped.push_back(q_insert(l, 4, term));
          if (sq_monomial(k, q_insert(l, 4, m)) != Polynomial(4, mapped)) commute = false;
        }
    });
  run.holds("q commutes with Sq^k", commute);
}

void small_dims(Runner& run, HitEngine& engine) {
  run.equal("dim Q(1,3)", std::size_t{1}, dim_q(engine, 1, 3));
  run.equal("dim Q(1,4)", std::size_t{0}, dim_q(engine, 1, 4));
  run.equal("dim Q(2,4)", std::size_t{2}, dim_q(engine, 2, 4));
  run.equal("kernel of Kameko (2,1)", std::size_t{0}, kameko_kernel_dim(engine, 2, 1));
  run.equal("dim Q(5,5)", std::size_t{46}, dim_q(engine, 5, 5));
  run.equal("dim Q(5,13)", std::size_t{250}, dim_q(engine, 5, 13));
  run.equal("dim Q(5,14)", std::size_t{320}, dim_q(engine, 5, 14));
  run.equal("dim Q(5,14)^(2,2,2)", std::size_t{130}, dim_q_omega(engine, 5, 14, {2, 2, 2}));
  run.equal("dim Q(5,14)^(2,4,1)", std::size_t{15}, dim_q_omega(engine, 5, 14, {2, 4, 1}));
  run.equal("dim Q(5,14)^(4,3,1)", std::size_t{175}, dim_q_omega(engine, 5, 14, {4, 3, 1}));
  std::uint64_t d31[] = {1, 1, 8, 47}, d32[] = {0, 3, 5, 57};
  run.equal("zero-support formula n=31", std::uint64_t{330}, dim_q_zero_via_formula(5, d31));
  run.equal("zero-support formula n=32", std::uint64_t{365}, dim_q_zero_via_formula(5, d32));
  GroupSpec gl{GroupKind::general_linear, 5};
  run.equal("GL5 invariants of Q(5,14)", std::size_t{1}, invariant_dim(engine, 5, 14, gl).dimension);
  run.equal("GL5 invariants of Q(5,14)^(2,2,2)", std::size_t{1}, invariant_dim_omega(engine, 5, 14, {2, 2, 2}, gl).dimension);
  run.equal("GL5 invariants of Q(5,14)^(2,4,1)", std::size_t{0}, invariant_dim_omega(engine, 5, 14, {2, 4, 1}, gl).dimension);
  run.equal("GL5 invariants of Q(5,14)^(4,3,1)", std::size_t{0}, invariant_dim_omega(engine, 5, 14, {4, 3, 1}, gl).dimension);
}

void quick_suite(Runner& run, HitEngine& engine) {
  run.guarded("arithmetic", [&] { arithmetic_checks(run); });
  run.guarded("monomials", [&] { monomial_checks(run); });
  run.guarded("steenrod", [&] { steenrod_checks(run); });
  run.guarded("linear algebra", [&] { linalg_checks(run); });
  run.guarded("small dimensions", [&] { small_dims(run, engine); });
  run.guarded("order independence", [&] { order_independence_check(run, engine); });
  run.guarded("spikes", [&] { spike_checks(run, engine, 32, 14); });
  run.guarded("singer", [&] { singer_checks(run, engine); });
  run.guarded("maps", [&] { map_checks(run, engine); });
}

void appendix_checks(Runner& run, HitEngine& engine, const std::string& dir);

void paper_suite(Runner& run, HitEngine& engine, const std::string& data_dir) {
  bool standalone = engine.options().standalone_ranks;
  engine.options().standalone_ranks = true;
  run.guarded("trace (5,31)", [&] {
    auto qb = engine.basis(5, 31);
    const auto& tr = *qb->trace();
    std::vector<std::size_t> src, alone, cum;
    for (const auto& f : tr.families) {
      src.push_back(f.sources);
      alone.push_back(f.standalone_rank.value_or(0));
      cum.push_back(f.cumulative_rank);
    }
    run.equal("trace sources", fmt::format("{}", fmt::join(std::vector<int>{46376, 40920, 31465, 17550, 3876}, ",")),
              fmt::format("{}", fmt::join(src, ",")));
    run.equal("trace standalone ranks", std::string("24615,28665,26520,15900,0"), fmt::format("{}", fmt::join(alone, ",")));
    run.equal("trace cumulative ranks", std::string("24615,43334,49530,51494,51494"), fmt::format("{}", fmt::join(cum, ",")));
    run.equal("monomials of degree 31", std::size_t{52360}, tr.total_columns);
    run.equal("dim Q(5,31)", std::size_t{866}, qb->dim());
  });
  engine.options().standalone_ranks = standalone;

  run.guarded("degree 31", [&] {
    auto qb = engine.basis(5, 31);
    run.holds("x1 x2^2 x3^4 x4^8 x5^16 admissible", qb->is_admissible(mono({1, 2, 4, 8, 16})));
    run.holds("x1^2 x2 x3^4 x4^8 x5^16 inadmissible", !qb->is_admissible(mono({2, 1, 4, 8, 16})));
    const WeightVector w1{1, 1, 1, 1, 1}, w2{3, 2, 2, 2}, w3{3, 4, 3, 1};
    run.equal("(5,31) w(1) positive", std::size_t{1}, dim_q_omega(engine, 5, 31, w1, SupportPart::positive));
    run.equal("(5,31) w(2) positive", std::size_t{215}, dim_q_omega(engine, 5, 31, w2, SupportPart::positive));
    run.equal("(5,31) w(3) positive", std::size_t{70}, dim_q_omega(engine, 5, 31, w3, SupportPart::positive));
    run.equal("(5,31) w(1) zero", std::size_t{30}, dim_q_omega(engine, 5, 31, w1, SupportPart::zero));
    run.equal("(5,31) w(2) zero", std::size_t{300}, dim_q_omega(engine, 5, 31, w2, SupportPart::zero));
    for (const WeightVector& w : {WeightVector{1, 1, 1, 3}, WeightVector{1, 3, 2, 2}, WeightVector{1, 3, 4, 1},
                                  WeightVector{3, 2, 4, 1}})
      run.equal(fmt::format("(5,31) ({}) positive", w.to_string()), std::size_t{0},
                dim_q_omega(engine, 5, 31, w, SupportPart::positive));
    std::size_t zero = 0;
    for (const auto& a : qb->admissible()) zero += is_positive_support(a) ? 0 : 1;
    run.equal("(5,31) zero-support part", std::size_t{330}, zero);
    KamekoOptions ko;
    ko.split = true;
    auto rep = kameko(engine, 5, 13, ko);
    run.equal("Kameko kernel (5,13)", std::size_t{616}, rep.kernel_dim);
    std::string split = fmt::format("{}", rep.split_zero);
    for (const auto& e : rep.split_positive) split += fmt::format("+{}", e.dim);
    run.equal("Kameko kernel split", std::string("330+1+215+70"), split);
    auto sum = verify_sum_conjecture(engine, 5, 31, w2);
    run.holds("Sum's conjecture (5,31,(3,2,2,2))", sum.holds());
  });

  run.guarded("degree 32", [&] {
    auto qb = engine.basis(5, 32);
    run.equal("monomials of degree 32", std::size_t{58905}, qb->context().size());
    run.equal("hit rank (5,32)", std::size_t{57901}, qb->hit_rank());
    run.equal("dim Q(5,32)", std::size_t{1004}, qb->dim());
    const WeightVector w[] = {{2, 1, 1, 1, 1}, {4, 2, 2, 2}, {4, 4, 3, 1}};
    const std::size_t zero[] = {115, 175, 75}, pos[] = {9, 310, 320};
    for (int i = 0; i < 3; ++i) {
      run.equal(fmt::format("(5,32) ({}) zero", w[i].to_string()), zero[i],
                dim_q_omega(engine, 5, 32, w[i], SupportPart::zero));
      run.equal(fmt::format("(5,32) ({}) positive", w[i].to_string()), pos[i],
                dim_q_omega(engine, 5, 32, w[i], SupportPart::positive));
      run.holds(fmt::format("Sum's conjecture (5,32,({}))", w[i].to_string()),
                verify_sum_conjecture(engine, 5, 32, w[i]).holds());
    }
    std::size_t z = 0;
    for (const auto& a : qb->admissible()) z += is_positive_support(a) ? 0 : 1;
    run.equal("(5,32) zero-support part", std::size_t{365}, z);
  });

  run.guarded("degree 14", [&] {
    auto rep = verify_sum_conjecture(engine, 5, 14, {2, 4, 1});
    run.equal("admissible (2,4,1) monomials in 4 variables, degree 14", std::size_t{0}, rep.sources);
    run.holds("Sum's conjecture (5,14,(2,4,1))", rep.holds());
  });

  run.guarded("invariants", [&] {
    GroupSpec gl{GroupKind::general_linear, 5};
    run.equal("GL5 invariants of Q(5,14)", std::size_t{1}, invariant_dim(engine, 5, 14, gl).dimension);
    run.equal("GL5 invariants of Q(5,31)", std::size_t{2}, invariant_dim(engine, 5, 31, gl).dimension);
    run.equal("GL5 invariants of Q(5,32)", std::size_t{0}, invariant_dim(engine, 5, 32, gl).dimension);
    run.equal("GL5 invariants of Q(5,13)", std::size_t{0}, invariant_dim(engine, 5, 13, gl).dimension);
    const WeightVector w14[] = {{2, 2, 2}, {2, 4, 1}, {4, 3, 1}};
    const WeightVector w31[] = {{1, 1, 1, 1, 1}, {3, 2, 2, 2}, {3, 4, 3, 1}};
    const std::size_t e14[] = {1, 0, 0}, e31[] = {1, 1, 0};
    for (int i = 0; i < 3; ++i) {
      run.equal(fmt::format("GL5 invariants of Q(5,14)^({})", w14[i].to_string()), e14[i],
                invariant_dim_omega(engine, 5, 14, w14[i], gl).dimension);
      run.equal(fmt::format("GL5 invariants of Q(5,31)^({})", w31[i].to_string()), e31[i],
                invariant_dim_omega(engine, 5, 31, w31[i], gl).dimension);
    }
  });

  run.guarded("closed form", [&] {
    run.equal("validate_dlP(6,47)", true, arith::validate_dlP(6, 47));
    run.equal("sum_phuc_dimension(6,1894)", std::uint64_t{119322}, arith::sum_phuc_dimension(6, 1894));
  });
  appendix_checks(run, engine, data_dir);
  run.guarded("theorem table", [&] {
    run.equal("dim Q(5,5)", std::size_t{46}, dim_q(engine, 5, 5));
    run.equal("dim Q(5,13)", std::size_t{250}, dim_q(engine, 5, 13));
  });
}

void appendix_checks(Runner& run, HitEngine& engine, const std::string& dir) {
  for (const auto& list : published_lists()) {
    std::string label = fmt::format("list {}", list.file);
    run.guarded(label, [&] {
      auto monomials = read_monomial_list(dir + "/" + list.file);
      auto qb = engine.basis(5, list.degree);
      std::size_t admissible = 0, matching = 0;
      for (const auto& m : monomials) {
        admissible += qb->is_admissible(m) ? 1 : 0;
        matching += weight_vector(m) == list.weight && in_part(m, list.part) ? 1 : 0;
      }
      std::size_t expected = dim_q_omega(engine, 5, list.degree, list.weight, list.part);
      run.equal(label + " admissible", monomials.size(), admissible);
      run.equal(label + " weight and support", monomials.size(), matching);
      run.equal(label + " count", expected, monomials.size());
    });
  }
  run.guarded("symmetric invariants (5,14)", [&] {
    auto listed = read_monomial_list(dir + "/deg14_w222.txt");
    auto qb = engine.basis(5, 14);
    const WeightVector w{2, 2, 2};
    auto local = admissible_of_weight(*qb, w, SupportPart::all);
    EchelonSpan published(local.size());
    for (const auto& sum : symmetric_invariant_sums_deg14()) {
      BitRow v(local.size());
      for (std::size_t j : sum)
        v.flip(static_cast<std::size_t>(std::find(local.begin(), local.end(), listed.at(j - 1)) - local.begin()));
      published.insert(v);
    }
    auto sym = invariant_dim_omega(engine, 5, 14, w, {GroupKind::symmetric, 5});
    bool same = sym.dimension == published.rank();
    for (const auto& v : sym.basis) same = same && published.contains(v);
    run.holds("symmetric invariants of Q(5,14)^(2,2,2) are the six published sums", same);
    auto gl = invariant_dim_omega(engine, 5, 14, w, {GroupKind::general_linear, 5});
    bool inside = gl.dimension == 1 && published.contains(gl.basis.front());
    run.holds("GL5 invariant of Q(5,14)^(2,2,2) is a combination of the published sums", inside);
  });
}

void extended_suite(Runner& run, HitEngine& engine) {
  run.guarded("dim Q(5,29)", [&] { run.equal("dim Q(5,29)", std::size_t{645}, dim_q(engine, 5, 29)); });
  run.guarded("dim Q(5,47)", [&] { run.equal("dim Q(5,47)", std::size_t{1894}, dim_q(engine, 5, 47)); });
}

}  // namespace

std::vector<Monomial> read_monomial_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument(fmt::format("cannot open {}", path));
  std::vector<Monomial> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(Monomial::parse(line));
  }
  return out;
}

const std::vector<PublishedList>& published_lists() {
  static const std::vector<PublishedList> lists = {
      {"deg14_w222.txt", 14, {2, 2, 2}, SupportPart::all},
      {"deg14_w241.txt", 14, {2, 4, 1}, SupportPart::all},
      {"deg14_w431.txt", 14, {4, 3, 1}, SupportPart::all},
      {"deg31_w3222_positive.txt", 31, {3, 2, 2, 2}, SupportPart::positive},
      {"deg31_w3431_positive.txt", 31, {3, 4, 3, 1}, SupportPart::positive},
      {"deg32_w21111_zero.txt", 32, {2, 1, 1, 1, 1}, SupportPart::zero},
      {"deg32_w21111_positive.txt", 32, {2, 1, 1, 1, 1}, SupportPart::positive},
      {"deg32_w4222_zero.txt", 32, {4, 2, 2, 2}, SupportPart::zero},
      {"deg32_w4222_positive.txt", 32, {4, 2, 2, 2}, SupportPart::positive},
      {"deg32_w4431_zero.txt", 32, {4, 4, 3, 1}, SupportPart::zero},
      {"deg32_w4431_positive.txt", 32, {4, 4, 3, 1}, SupportPart::positive},
  };
  return lists;
}

std::vector<std::vector<std::size_t>> symmetric_invariant_sums_deg14() {
  auto range = [](std::size_t a, std::size_t b) {
    std::vector<std::size_t> v;
    for (std::size_t j = a; j <= b; ++j) v.push_back(j);
    return v;
  };
  return {range(1, 10),
          range(11, 40),
          range(41, 50),
          range(51, 70),
          {71, 73, 75, 76, 77, 111, 112, 113, 114, 115},
          {116, 117, 118, 119, 121, 122, 124, 125, 127, 128, 129, 130}};
}

std::vector<std::size_t> printed_zeta_indices() {
  return {51,  53,  55,  56,  57,  111, 112, 113, 114, 115, 116, 117,
          118, 119, 115, 121, 122, 124, 125, 127, 128, 129, 130};
}

SuiteReport run_suite(std::string_view suite, HitEngine& engine, const SuiteOptions& options) {
  SuiteReport report;
  report.suite = std::string(suite);
  Runner run(report, options.on_check);
  if (suite == "quick")
    quick_suite(run, engine);
  else if (suite == "paper")
    paper_suite(run, engine, options.data_dir);
  else if (suite == "extended")
    extended_suite(run, engine);
  else
    throw InvalidArgument(fmt::format("unknown suite '{}' (quick, paper, extended)", suite));
  return report;
}

}  // namespace hitcalc
