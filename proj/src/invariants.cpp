#include "hitcalc/invariants.hpp"

#include <fmt/format.h>

#include "hitcalc/error.hpp"

namespace hitcalc {

GroupKind parse_group_kind(std::string_view text) {
  if (text == "gl" || text == "GL") return GroupKind::general_linear;
  if (text == "sym" || text == "symmetric") return GroupKind::symmetric;
  throw InvalidArgument(fmt::format("unknown group '{}' (expected gl or sym)", text));
}

std::string_view to_string(GroupKind kind) { return kind == GroupKind::general_linear ? "gl" : "sym"; }

SubstitutionMap sigma(std::size_t d, std::size_t t) {
  if (t < 1 || t > kMaxVariables || d < 1 || d > t)
    throw InvalidArgument(fmt::format("sigma_{} is not defined for t = {}", d, t));
  if (d == t && t < 2) throw InvalidArgument("the transvection needs at least two variables");
  auto var = [t](std::size_t j) {
    Monomial x(t);
    x[j] = 1;
    return Polynomial(x);
  };
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < t; ++j) images.push_back(var(j));
  if (d < t) {
    std::swap(images[d - 1], images[d]);
  } else {
    images[0] += var(1);
  }
  return SubstitutionMap(t, std::move(images));
}

std::vector<SubstitutionMap> generators(const GroupSpec& group) {
  std::vector<SubstitutionMap> out;
  for (std::size_t d = 1; d < group.t; ++d) out.push_back(sigma(d, group.t));
  if (group.kind == GroupKind::general_linear && group.t >= 2) out.push_back(sigma(group.t, group.t));
  return out;
}

ActionMatrix identity_matrix(std::size_t dim) {
  ActionMatrix m(dim, BitRow(dim));
  for (std::size_t j = 0; j < dim; ++j) m[j].set(j);
  return m;
}

ActionMatrix multiply(const ActionMatrix& a, const ActionMatrix& b) {
  std::size_t rows = a.empty() ? 0 : a.front().size();
  ActionMatrix out(b.size(), BitRow(rows));
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j].size() != a.size()) throw InvalidArgument("matrix product: size mismatch");
    for (std::size_t k : b[j].set_bits()) out[j] ^= a[k];
  }
  return out;
}

ActionMatrix add(const ActionMatrix& a, const ActionMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("matrix sum: size mismatch");
  ActionMatrix out = a;
  for (std::size_t j = 0; j < a.size(); ++j) out[j] ^= b[j];
  return out;
}

ActionMatrix induced_action(const QuotientBasis& qb, const SubstitutionMap& map) {
  if (map.source_variables() != qb.context().variables() || map.target_variables() != qb.context().variables())
    throw InvalidArgument("induced_action: map must be an endomorphism of the basis' variables");
  ActionMatrix out;
  out.reserve(qb.dim());
  for (const auto& m : qb.admissible()) out.push_back(qb.coordinates(substitute(map, m)));
  return out;
}

ActionMatrix induced_action_omega(const QuotientBasis& qb, const WeightVector& w, const SubstitutionMap& map) {
  if (map.source_variables() != qb.context().variables() || map.target_variables() != qb.context().variables())
    throw InvalidArgument("induced_action_omega: map must be an endomorphism of the basis' variables");
  auto basis = admissible_of_weight(qb, w, SupportPart::all);
  std::vector<std::size_t> coordinate;  // global admissible index -> local
  for (const auto& m : basis) coordinate.push_back(*qb.admissible_index(m));
  ActionMatrix out;
  out.reserve(basis.size());
  for (const auto& m : basis) {
    Polynomial image = substitute(map, m);
    std::vector<Monomial> kept;
    for (const auto& term : image.terms()) {
      auto tw = weight_vector(term);
      if (tw > w)
        throw FiltrationViolation(fmt::format("image of ({}) has term ({}) of weight ({}) above ({})", m.to_string(),
                                              term.to_string(), tw.to_string(), w.to_string()));
      if (tw == w) kept.push_back(term);
    }
    BitRow full = qb.coordinates(Polynomial(qb.context().variables(), std::move(kept)));
    BitRow col(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (full.test(coordinate[i])) col.set(i);
    out.push_back(std::move(col));
  }
  return out;
}

InvariantResult fixed_space(const std::vector<ActionMatrix>& matrices, std::size_t dim) {
  InvariantResult res;
  if (dim == 0) return res;
  EchelonSpan equations(dim);
  BitMatrix rows(dim);
  for (const auto& m : matrices) {
    if (m.size() != dim) throw InvalidArgument("fixed_space: matrix size mismatch");
    // Row i of (M + I): bit j is entry (i, j).
    std::vector<BitRow> t(dim, BitRow(dim));
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i : m[j].set_bits()) t[i].flip(j);
    for (std::size_t i = 0; i < dim; ++i) {
      t[i].flip(i);
      if (!t[i].is_zero()) rows.append_row(t[i]);
    }
  }
  equations.insert_batch(std::move(rows));
  res.basis = equations.nullspace();
  res.dimension = res.basis.size();
  return res;
}

InvariantResult invariant_dim(HitEngine& engine, std::size_t t, std::uint64_t n, const GroupSpec& group) {
  if (group.t != t) throw InvalidArgument("group and quotient have different variable counts");
  auto qb = engine.basis(t, n);
  std::vector<ActionMatrix> mats;
  for (const auto& g : generators(group)) mats.push_back(induced_action(*qb, g));
  return fixed_space(mats, qb->dim());
}

InvariantResult invariant_dim_omega(HitEngine& engine, std::size_t t, std::uint64_t n, const WeightVector& w,
                                    const GroupSpec& group) {
  if (group.t != t) throw InvalidArgument("group and quotient have different variable counts");
  if (weight_degree(w) != n) throw InvalidArgument(fmt::format("weight ({}) is not of degree {}", w.to_string(), n));
  auto qb = engine.basis(t, n);
  std::size_t dim = admissible_of_weight(*qb, w, SupportPart::all).size();
  std::vector<ActionMatrix> mats;
  for (const auto& g : generators(group)) mats.push_back(induced_action_omega(*qb, w, g));
  return fixed_space(mats, dim);
}

}  // namespace hitcalc
