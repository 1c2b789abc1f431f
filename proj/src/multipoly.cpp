// SPDX-License-Identifier: Apache-2.0
#include "symtrace/multipoly.hpp"

#include <numeric>

#include "symtrace/error.hpp"

namespace symtrace {

namespace {

std::size_t degree_of(const MultiPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

}  // namespace

bool GrlexDescending::operator()(const std::vector<std::uint16_t>& a,
                                 const std::vector<std::uint16_t>& b) const {
  const auto da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(std::size_t variables, const mpq_class& c) {
  MultiPoly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) fail(ErrorKind::InvalidArgument, "variable index out of range");
  Exponents e(variables, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Exponents exponents, const mpq_class& c) {
  MultiPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

std::size_t MultiPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

void MultiPoly::add_term(const Exponents& e, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MultiPoly::require_compatible(const MultiPoly& other) const {
  if (variables_ != other.variables_) {
    fail(ErrorKind::DimensionMismatch, "polynomials over " + std::to_string(variables_) + " and " +
                                           std::to_string(other.variables_) + " indeterminates");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  MultiPoly out(a.variables_);
  MultiPoly::Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) {
        e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

FieldElement MultiPoly::evaluate(std::span<const FieldElement> values) const {
  if (values.size() != variables_) {
    fail(ErrorKind::DimensionMismatch, "evaluation point has " + std::to_string(values.size()) +
                                           " coordinates, expected " +
                                           std::to_string(variables_));
  }
  if (values.empty()) {
    fail(ErrorKind::InvalidArgument, "cannot infer the field of an empty evaluation point");
  }
  const auto field = values.front().field();
  auto sum = FieldElement::zero(field);
  for (const auto& [e, c] : terms_) {
    auto term = FieldElement::from_rational(c, field);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] != 0) term *= values[v].pow(e[v]);
    }
    sum += term;
  }
  return sum;
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
MultiPoly poly_scale(const MultiPoly& p, const mpq_class& c) { return p * c; }

}  // namespace symtrace
