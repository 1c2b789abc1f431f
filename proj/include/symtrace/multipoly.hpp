// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "symtrace/field.hpp"

namespace symtrace {

/// Graded-lexicographic order, largest first: higher total degree wins, ties
/// are broken by the first differing exponent.
struct GrlexDescending {
  bool operator()(const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b) const;
};

/// Sparse polynomial with rational coefficients in a fixed number of
/// indeterminates. Exponent vectors are dense (one slot per indeterminate)
/// and no zero coefficient is ever stored, so equality is term-for-term.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint16_t>;
  using TermMap = std::map<Exponents, mpq_class, GrlexDescending>;

  explicit MultiPoly(std::size_t variables = 0) : variables_(variables) {}

  static MultiPoly constant(std::size_t variables, const mpq_class& c);
  static MultiPoly variable(std::size_t variables, std::size_t index);
  static MultiPoly monomial(Exponents exponents, const mpq_class& c);

  std::size_t variable_count() const noexcept { return variables_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t total_degree() const noexcept;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const mpq_class& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

  /// Substitutes field values for the indeterminates.
  FieldElement evaluate(std::span<const FieldElement> values) const;

 private:
  void add_term(const Exponents& e, const mpq_class& c);
  void require_compatible(const MultiPoly& other) const;

  std::size_t variables_;
  TermMap terms_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_scale(const MultiPoly& p, const mpq_class& c);

// Ring hooks for SquareMatrix<MultiPoly>.
inline MultiPoly zero_like(const MultiPoly& x) { return MultiPoly(x.variable_count()); }
inline MultiPoly one_like(const MultiPoly& x) { return MultiPoly::constant(x.variable_count(), 1); }
inline MultiPoly integer_like(const MultiPoly& x, long long k) {
  return MultiPoly::constant(x.variable_count(), mpq_class(mpz_class(static_cast<long>(k))));
}
inline MultiPoly divide_by_integer(const MultiPoly& x, long long k) {
  return x * mpq_class(1, static_cast<unsigned long>(k));
}
inline bool is_zero(const MultiPoly& x) noexcept { return x.is_zero(); }
inline void check_dimension(const MultiPoly&, std::size_t) {}

}  // namespace symtrace
