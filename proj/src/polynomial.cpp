#include "hitcalc/polynomial.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "hitcalc/error.hpp"

namespace hitcalc {

namespace {

void require_same_variables(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw InvalidArgument(fmt::format("{}: variable counts {} and {} differ", what, a, b));
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial r(a.variables());
  for (std::size_t i = 0; i < a.variables(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

void normalize_terms(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end(), MonomialLess{});
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) terms[out++] = terms[i];
    i = j;
  }
  terms.resize(out);
}

Polynomial::Polynomial(std::size_t variables) : vars_(variables) {
  if (variables == 0 || variables > kMaxVariables) {
    throw InvalidArgument(fmt::format("variable count {} outside 1..{}", variables, kMaxVariables));
  }
}

Polynomial::Polynomial(const Monomial& m) : vars_(m.variables()), terms_{m} {}

Polynomial::Polynomial(std::size_t variables, std::vector<Monomial> terms) : Polynomial(variables) {
  for (const auto& m : terms) require_same_variables(vars_, m.variables(), "polynomial");
  terms_ = std::move(terms);
  normalize_terms(terms_);
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, MonomialLess{});
}

std::uint64_t Polynomial::homogeneous_degree() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no degree");
  const auto d = terms_.front().degree();
  for (const auto& m : terms_) {
    if (m.degree() != d) throw InvalidArgument("polynomial is not homogeneous");
  }
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_variables(vars_, other.vars_, "add");
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                std::back_inserter(merged), MonomialLess{});
  terms_ = std::move(merged);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_variables(a.vars_, b.vars_, "mul");
  std::vector<Monomial> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back(multiply(x, y));
  }
  return Polynomial(a.vars_, std::move(prod));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += terms_[i].to_string();
  }
  return out;
}

Polynomial Polynomial::parse(std::size_t variables, std::string_view text) {
  const auto trimmed = [](std::string_view v) {
    const auto b = v.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return std::string_view{};
    const auto e = v.find_last_not_of(" \t\r\n");
    return v.substr(b, e - b + 1);
  };
  Polynomial result(variables);
  text = trimmed(text);
  if (text.empty() || text == "0") return result;
  std::vector<Monomial> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto plus = text.find('+', pos);
    if (plus == std::string_view::npos) plus = text.size();
    auto m = Monomial::parse(trimmed(text.substr(pos, plus - pos)));
    require_same_variables(variables, m.variables(), "parse");
    terms.push_back(m);
    pos = plus + 1;
  }
  return Polynomial(variables, std::move(terms));
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial square(const Polynomial& p) {
  // Frobenius: cross terms cancel in characteristic 2, and doubling
  // exponents preserves the term order.
  Polynomial result = p;
  for (auto& m : result.terms_) {
    for (std::size_t i = 0; i < m.variables(); ++i) m[i] *= 2;
  }
  return result;
}

Polynomial power(const Polynomial& p, std::uint64_t e) {
  Polynomial result(Monomial(p.variables()));
  Polynomial base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = square(base);
  }
  return result;
}

// --------------------------------------------------------- substitutions

SubstitutionMap::SubstitutionMap(std::size_t target_variables, std::vector<Polynomial> images)
    : target_(target_variables), images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxVariables) throw InvalidArgument("substitution: bad source size");
  for (const auto& p : images_) require_same_variables(target_, p.variables(), "substitution image");
}

SubstitutionMap SubstitutionMap::identity(std::size_t t) {
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < t; ++j) {
    Monomial x(t);
    x[j] = 1;
    images.emplace_back(x);
  }
  return SubstitutionMap(t, std::move(images));
}

Polynomial substitute(const SubstitutionMap& map, const Monomial& m) {
  require_same_variables(map.source_variables(), m.variables(), "substitute");
  Polynomial result(Monomial(map.target_variables()));
  for (std::size_t j = 0; j < m.variables() && !result.is_zero(); ++j) {
    if (m[j] == 0) continue;
    const auto& img = map.image(j);
    if (img.size() == 1) {
      // Single-term image: raise the monomial directly.
      Monomial scaled = img.terms().front();
      for (std::size_t i = 0; i < scaled.variables(); ++i) scaled[i] *= m[j];
      result = result * Polynomial(scaled);
    } else {
      result = result * power(img, m[j]);
    }
  }
  return result;
}

Polynomial substitute(const SubstitutionMap& map, const Polynomial& p) {
  require_same_variables(map.source_variables(), p.variables(), "substitute");
  std::vector<Monomial> terms;
  for (const auto& m : p.terms()) {
    const auto image = substitute(map, m);
    terms.insert(terms.end(), image.terms().begin(), image.terms().end());
  }
  return Polynomial(map.target_variables(), std::move(terms));
}

}  // namespace hitcalc
