// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace symtrace {

/// The coefficient field: either the rationals or the integers modulo a prime.
class Field {
 public:
  /// Largest accepted prime modulus; residues must multiply within 64 bits.
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;

  static Field rational() noexcept { return Field(); }
  /// Throws InvalidArgument unless p is a prime no larger than kMaxModulus.
  static Field prime(std::uint64_t p);
  /// Accepts "rational" or "gf:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return modulus_ == 0; }
  bool is_prime() const noexcept { return modulus_ != 0; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// 0 for the rationals, p otherwise.
  std::uint64_t characteristic() const noexcept { return modulus_; }

  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  friend class FieldElement;

  Field() = default;
  explicit Field(std::uint64_t p) : modulus_(p) {}

  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t p) noexcept;

/// Exact scalar tagged with its field. Rationals are kept in lowest terms
/// with a positive denominator, residues in [0, p).
class FieldElement {
 public:
  /// Rational zero.
  FieldElement() = default;

  static FieldElement zero(Field field) { return from_integer(0, field); }
  static FieldElement one(Field field) { return from_integer(1, field); }
  static FieldElement from_integer(long long value, Field field);
  static FieldElement from_integer(const mpz_class& value, Field field);
  /// Maps num/den into the field; throws DivisionByZero when den vanishes there.
  static FieldElement from_rational(const mpq_class& value, Field field);

  /// Rationals: "p/q" or "p" with an optional leading minus. Prime fields:
  /// a decimal integer, reduced modulo p.
  static FieldElement parse(std::string_view text, Field field);
  std::string to_string() const;

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Throws InvalidArgument when the element is not rational.
  const mpq_class& as_rational() const;
  /// Throws InvalidArgument when the element is not a residue.
  std::uint64_t as_residue() const;

  FieldElement inverse() const;
  /// Negative exponents go through the inverse.
  FieldElement pow(long long exponent) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Elements of different fields compare unequal.
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  explicit FieldElement(mpq_class q) : value_(std::move(q)) {}
  explicit FieldElement(Residue r) : value_(r) {}

  void require_same_field(const FieldElement& other) const;

  std::variant<mpq_class, Residue> value_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
inline FieldElement from_integer(long long k, Field field) {
  return FieldElement::from_integer(k, field);
}

// Ring hooks used by the generic matrix algorithms.
inline FieldElement zero_like(const FieldElement& x) { return FieldElement::zero(x.field()); }
inline FieldElement one_like(const FieldElement& x) { return FieldElement::one(x.field()); }
inline FieldElement integer_like(const FieldElement& x, long long k) {
  return FieldElement::from_integer(k, x.field());
}
inline FieldElement divide_by_integer(const FieldElement& x, long long k) {
  return x / FieldElement::from_integer(k, x.field());
}
inline bool is_zero(const FieldElement& x) noexcept { return x.is_zero(); }

}  // namespace symtrace
