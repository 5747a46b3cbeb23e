#pragma once

#include <cstdint>

namespace hitcalc::arith {

/// n = r(2^d - 1) + m 2^d.
struct GenericDegreeSpec {
  std::uint64_t r = 1;
  std::uint64_t m = 0;
  unsigned d = 0;
};

/// Number of ones in the binary expansion of n.
unsigned alpha(std::uint64_t n);

/// Bit j of n, i.e. the j-th dyadic coefficient.
inline unsigned alpha_at(std::uint64_t n, unsigned j) { return j >= 64 ? 0u : unsigned((n >> j) & 1u); }

/// Least number of summands of the form 2^d - 1 (d > 0) adding up to n.
/// Computed as the least r with alpha(n + r) <= r; mu(0) = 0.
unsigned mu(std::uint64_t n);

/// C(a, b) mod 2 by Lucas: odd iff the bits of b are a subset of those of a.
inline bool binom_mod2(std::uint64_t a, std::uint64_t b) { return (b & ~a) == 0; }

std::uint64_t generic_degree(const GenericDegreeSpec& spec);

/// Q_n in t variables vanishes when mu(n) > t.
bool wood_trivial(unsigned t, std::uint64_t n);

/// The Kameko map Q_{t+2n} -> Q_n is an isomorphism when mu(t + 2n) = t.
bool kameko_iso(unsigned t, std::uint64_t n);

/// (2^t - 1) * base_dim. Only meaningful when validate_dlP(t, n_zeta) holds.
std::uint64_t sum_phuc_dimension(unsigned t, std::uint64_t base_dim);

/// 1 <= t - 3 <= mu(n_zeta) = alpha(n_zeta + mu(n_zeta)) <= t - 2.
bool validate_dlP(unsigned t, std::uint64_t n_zeta);

}  // namespace hitcalc::arith
