// SPDX-License-Identifier: Apache-2.0
#include "symtrace/field.hpp"

#include <charconv>

#include "symtrace/error.hpp"

namespace symtrace {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MixedField: return "MixedFieldError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorKind::FunctionalVanishes: return "FunctionalVanishes";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::OutOfValidatedRange: return "OutOfValidatedRange";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > kMaxModulus) {
    fail(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " exceeds 2^32-1");
  }
  if (!symtrace::is_prime(p)) {
    fail(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "rational") return rational();
  constexpr std::string_view prefix = "gf:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      try {
        return prime(p);
      } catch (const Error& e) {
        fail(ErrorKind::Parse, std::string("bad field \"") + std::string(text) + "\": " + e.what());
      }
    }
  }
  fail(ErrorKind::Parse, "bad field \"" + std::string(text) + "\" (expected rational or gf:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("rational") : "gf:" + std::to_string(modulus_);
}

namespace {

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool is_unsigned_decimal(std::string_view s) {
  return !s.empty() && s.front() != '-' && is_decimal_integer(s);
}

}  // namespace

FieldElement FieldElement::from_integer(long long value, Field field) {
  return from_integer(mpz_class(static_cast<long>(value)), field);
}

FieldElement FieldElement::from_integer(const mpz_class& value, Field field) {
  if (field.is_rational()) return FieldElement(mpq_class(value));
  return FieldElement(Residue{reduce(value, field.modulus()), field.modulus()});
}

FieldElement FieldElement::from_rational(const mpq_class& value, Field field) {
  if (value.get_den() == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (field.is_rational()) {
    // gmpxx leaves mpq_class(num, den) unreduced; equality needs canonical form.
    mpq_class q = value;
    q.canonicalize();
    return FieldElement(std::move(q));
  }
  const auto p = field.modulus();
  const auto den = reduce(value.get_den(), p);
  if (den == 0) {
    fail(ErrorKind::DivisionByZero, "denominator vanishes modulo " + std::to_string(p));
  }
  return FieldElement(Residue{reduce(value.get_num(), p) * inverse_mod(den, p) % p, p});
}

FieldElement FieldElement::parse(std::string_view text, Field field) {
  const std::string s(text);
  if (field.is_prime()) {
    if (!is_decimal_integer(s)) {
      fail(ErrorKind::Parse, "bad residue \"" + s + "\"");
    }
    return from_integer(mpz_class(s, 10), field);
  }
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_decimal_integer(s)) fail(ErrorKind::Parse, "bad rational \"" + s + "\"");
    return FieldElement(mpq_class(mpz_class(s, 10)));
  }
  const auto num = s.substr(0, slash);
  const auto den = s.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_unsigned_decimal(den)) {
    fail(ErrorKind::Parse, "bad rational \"" + s + "\"");
  }
  mpz_class d(den, 10);
  if (d == 0) fail(ErrorKind::Parse, "zero denominator in \"" + s + "\"");
  mpq_class q(mpz_class(num, 10), d);
  q.canonicalize();
  return FieldElement(std::move(q));
}

std::string FieldElement::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str(10);
  return std::to_string(std::get<Residue>(value_).value);
}

Field FieldElement::field() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rational();
}

bool FieldElement::is_zero() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool FieldElement::is_one() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

const mpq_class& FieldElement::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  fail(ErrorKind::InvalidArgument, "element is not rational");
}

std::uint64_t FieldElement::as_residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  fail(ErrorKind::InvalidArgument, "element is not a residue");
}

void FieldElement::require_same_field(const FieldElement& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus)) {
    fail(ErrorKind::MixedField,
         "operands from " + field().to_string() + " and " + other.field().to_string());
  }
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q->get_mpq_t());
    return FieldElement(std::move(r));
  }
  const auto& r = std::get<Residue>(value_);
  return FieldElement(Residue{inverse_mod(r.value, r.modulus), r.modulus});
}

FieldElement FieldElement::pow(long long exponent) const {
  FieldElement base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  FieldElement result = one_like(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return FieldElement(mpq_class(-*q));
  const auto& r = std::get<Residue>(value_);
  return FieldElement(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require_same_field(other);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(other.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = (r.value + std::get<Residue>(other.value_).value) % r.modulus;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  require_same_field(other);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(other.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = (r.value + r.modulus - std::get<Residue>(other.value_).value) % r.modulus;
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  require_same_field(other);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(other.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = r.value * std::get<Residue>(other.value_).value % r.modulus;
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
  const auto* qa = std::get_if<mpq_class>(&a.value_);
  const auto* qb = std::get_if<mpq_class>(&b.value_);
  if (qa && qb) return *qa == *qb;
  if (qa || qb) return false;
  const auto& ra = std::get<FieldElement::Residue>(a.value_);
  const auto& rb = std::get<FieldElement::Residue>(b.value_);
  return ra.modulus == rb.modulus && ra.value == rb.value;
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement neg(const FieldElement& a) { return -a; }
FieldElement inv(const FieldElement& a) { return a.inverse(); }

}  // namespace symtrace
