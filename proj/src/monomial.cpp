#include "hitcalc/monomial.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "hitcalc/error.hpp"

namespace hitcalc {

namespace {

std::vector<std::string_view> split_tokens(std::string_view text, std::string_view separators) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto start = text.find_first_not_of(separators, pos);
    if (start == std::string_view::npos) break;
    auto end = text.find_first_of(separators, start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    pos = end;
  }
  return out;
}

unsigned parse_unsigned(std::string_view token) {
  unsigned value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InvalidArgument(fmt::format("not a non-negative integer: '{}'", token));
  }
  return value;
}

}  // namespace

// ---------------------------------------------------------------- weights

WeightVector::WeightVector(std::initializer_list<unsigned> entries) : entries_(entries) { trim(); }

WeightVector::WeightVector(std::vector<unsigned> entries) : entries_(std::move(entries)) { trim(); }

void WeightVector::trim() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

std::strong_ordering operator<=>(const WeightVector& a, const WeightVector& b) {
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                b.entries_.end());
}

std::string WeightVector::to_string() const { return fmt::format("{}", fmt::join(entries_, ",")); }

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<unsigned> entries;
  for (auto token : split_tokens(text, ", ()")) entries.push_back(parse_unsigned(token));
  return WeightVector(std::move(entries));
}

std::uint64_t weight_degree(const WeightVector& w) {
  std::uint64_t deg = 0;
  for (std::size_t j = 0; j < w.size(); ++j) deg += (std::uint64_t{1} << j) * w[j];
  return deg;
}

// -------------------------------------------------------------- monomials

Monomial::Monomial(std::size_t variables) {
  if (variables == 0 || variables > kMaxVariables) {
    throw InvalidArgument(fmt::format("variable count {} outside 1..{}", variables, kMaxVariables));
  }
  vars_ = static_cast<std::uint8_t>(variables);
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::span<const Exponent>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const Exponent> exponents) : Monomial(exponents.size()) {
  std::copy(exponents.begin(), exponents.end(), exps_.begin());
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < vars_; ++i) d += exps_[i];
  return d;
}

unsigned Monomial::support_mask() const {
  unsigned mask = 0;
  for (std::size_t i = 0; i < vars_; ++i) {
    if (exps_[i] != 0) mask |= 1u << i;
  }
  return mask;
}

std::string Monomial::to_string() const { return fmt::format("{}", fmt::join(exponents(), " ")); }

Monomial Monomial::parse(std::string_view text) {
  std::vector<Exponent> exps;
  for (auto token : split_tokens(text, " \t\r\n")) exps.push_back(parse_unsigned(token));
  if (exps.empty()) throw InvalidArgument("empty monomial");
  return Monomial(std::span<const Exponent>(exps));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ m.variables();
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

WeightVector weight_vector(const Monomial& m) {
  Exponent all = 0;
  for (auto e : m.exponents()) all |= e;
  const unsigned width = static_cast<unsigned>(std::bit_width(all));
  std::vector<unsigned> w(width, 0);
  for (auto e : m.exponents()) {
    for (unsigned j = 0; j < width; ++j) w[j] += (e >> j) & 1u;
  }
  return WeightVector(std::move(w));
}

std::strong_ordering compare(const Monomial& a, const Monomial& b) {
  if (a.variables() != b.variables()) {
    throw InvalidArgument("compare: monomials have different variable counts");
  }
  Exponent all = 0;
  for (auto e : a.exponents()) all |= e;
  for (auto e : b.exponents()) all |= e;
  const unsigned width = static_cast<unsigned>(std::bit_width(all));
  for (unsigned j = 0; j < width; ++j) {
    unsigned wa = 0;
    unsigned wb = 0;
    for (auto e : a.exponents()) wa += (e >> j) & 1u;
    for (auto e : b.exponents()) wb += (e >> j) & 1u;
    if (wa != wb) return wa <=> wb;
  }
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool is_spike(const Monomial& m) {
  for (auto e : m.exponents()) {
    if ((e & (e + 1)) != 0) return false;
  }
  return true;
}

bool is_positive_support(const Monomial& m) {
  for (auto e : m.exponents()) {
    if (e == 0) return false;
  }
  return true;
}

namespace {

// Exponent levels k_1 > k_2 > ... > k_{s-1} >= k_s >= 1 with sum of
// (2^k - 1) equal to rem, using at most `slots` entries. Largest first.
bool place_spike(std::uint64_t rem, std::size_t slots, unsigned max_level, std::vector<unsigned>& levels) {
  if (rem == 0) return true;
  if (slots == 0) return false;
  unsigned top = static_cast<unsigned>(std::bit_width(rem + 1)) - 1;  // 2^top - 1 <= rem
  top = std::min(top, max_level);
  for (unsigned k = top; k >= 1; --k) {
    const std::uint64_t v = (std::uint64_t{1} << k) - 1;
    const std::uint64_t left = rem - v;
    levels.push_back(k);
    if (left == 0) return true;
    // The final two levels may coincide.
    if (left == v && slots >= 2) {
      levels.push_back(k);
      return true;
    }
    if (place_spike(left, slots - 1, k - 1, levels)) return true;
    levels.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Monomial> minimal_spike(std::size_t t, std::uint64_t n) {
  Monomial result(t);
  if (n == 0) return result;
  std::vector<unsigned> levels;
  if (!place_spike(n, t, 63, levels)) return std::nullopt;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    result[i] = static_cast<Exponent>((std::uint64_t{1} << levels[i]) - 1);
  }
  return result;
}

}  // namespace hitcalc
