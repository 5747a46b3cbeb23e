#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hitcalc/f2_linalg.hpp"
#include "hitcalc/hit_quotient.hpp"
#include "hitcalc/polynomial.hpp"

namespace hitcalc {

enum class GroupKind { symmetric, general_linear };

struct GroupSpec {
  GroupKind kind = GroupKind::general_linear;
  std::size_t t = 1;
};

GroupKind parse_group_kind(std::string_view text);  // "gl" | "sym"
std::string_view to_string(GroupKind kind);

/// sigma_d in t variables: the transposition of x_d and x_{d+1} for d < t,
/// and x_1 -> x_1 + x_2 for d = t.
SubstitutionMap sigma(std::size_t d, std::size_t t);

/// sigma_1..sigma_{t-1}, plus sigma_t for the general linear group.
std::vector<SubstitutionMap> generators(const GroupSpec& group);

/// Square F_2 matrix stored by columns.
using ActionMatrix = std::vector<BitRow>;

ActionMatrix identity_matrix(std::size_t dim);
/// A * B, i.e. apply B first.
ActionMatrix multiply(const ActionMatrix& a, const ActionMatrix& b);
ActionMatrix add(const ActionMatrix& a, const ActionMatrix& b);

/// Column j is the class of map(admissible[j]) in admissible coordinates.
ActionMatrix induced_action(const QuotientBasis& qb, const SubstitutionMap& map);

/// Action on the weight-w component in the basis admissible_of_weight(qb,
/// w, all). Lower-weight terms are dropped; a higher-weight term throws
/// FiltrationViolation.
ActionMatrix induced_action_omega(const QuotientBasis& qb, const WeightVector& w, const SubstitutionMap& map);

struct InvariantResult {
  std::size_t dimension = 0;
  /// Basis of the invariant subspace, in the coordinates of the matrices.
  std::vector<BitRow> basis;
};

/// Common fixed space of the given matrices: nullspace of the stacked
/// blocks (M_d + I).
InvariantResult fixed_space(const std::vector<ActionMatrix>& matrices, std::size_t dim);

InvariantResult invariant_dim(HitEngine& engine, std::size_t t, std::uint64_t n, const GroupSpec& group);
InvariantResult invariant_dim_omega(HitEngine& engine, std::size_t t, std::uint64_t n, const WeightVector& w,
                                    const GroupSpec& group);

}  // namespace hitcalc
