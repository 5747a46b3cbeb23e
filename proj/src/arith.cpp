#include "hitcalc/arith.hpp"

#include <bit>

#include "hitcalc/error.hpp"

namespace hitcalc::arith {

unsigned alpha(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

unsigned mu(std::uint64_t n) {
  if (n == 0) return 0;
  // alpha(n + r) <= r holds by r = 64 at the latest for any 64-bit n
  // that does not overflow, so the loop is bounded.
  for (unsigned r = 1;; ++r) {
    if (alpha(n + r) <= r) return r;
  }
}

std::uint64_t generic_degree(const GenericDegreeSpec& spec) {
  if (spec.r == 0) throw InvalidArgument("generic degree: r must be positive");
  if (spec.d >= 63) throw InvalidArgument("generic degree: d too large");
  const std::uint64_t p = std::uint64_t{1} << spec.d;
  return spec.r * (p - 1) + spec.m * p;
}

bool wood_trivial(unsigned t, std::uint64_t n) { return mu(n) > t; }

bool kameko_iso(unsigned t, std::uint64_t n) { return mu(t + 2 * n) == t; }

std::uint64_t sum_phuc_dimension(unsigned t, std::uint64_t base_dim) {
  if (t < 2 || t >= 64) throw InvalidArgument("sum_phuc_dimension: t out of range");
  return ((std::uint64_t{1} << t) - 1) * base_dim;
}

bool validate_dlP(unsigned t, std::uint64_t n_zeta) {
  if (t < 4) return false;
  const unsigned m = mu(n_zeta);
  return t - 3 <= m && m == alpha(n_zeta + m) && m <= t - 2;
}

}  // namespace hitcalc::arith
