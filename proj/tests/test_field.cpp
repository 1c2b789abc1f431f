#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "symtrace/random.hpp"

using namespace symtrace;

namespace {

const Field Q = Field::rational();

FieldElement q(const char* text) { return FieldElement::parse(text, Q); }

// Plain modular arithmetic, kept separate from the library's residue code.
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * b % p);
    b = static_cast<std::uint64_t>((unsigned __int128)b * b % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

TEST_CASE("reference examples") {
  CHECK(add(q("1/2"), q("1/3")) == q("5/6"));
  CHECK(inv(from_integer(3, Field::prime(7))) == from_integer(5, Field::prime(7)));
  CHECK(inv(from_integer(3, Field::prime(7))).as_residue() == 5);
  CHECK(mul(from_integer(-1, Q), from_integer(-1, Q)) == from_integer(1, Q));
  CHECK(neg(q("2/7")).to_string() == "-2/7");
}

TEST_CASE("field tags") {
  CHECK(Field::parse("rational").is_rational());
  CHECK(Field::parse("gf:10007").modulus() == 10007);
  CHECK(Field::parse("gf:10007").to_string() == "gf:10007");
  CHECK(Field::prime(4294967291ULL).modulus() == 4294967291ULL);
  CHECK_THROWS_AS(Field::parse("gf:10"), Error);
  CHECK_THROWS_AS(Field::parse("real"), Error);
  CHECK_THROWS_AS(Field::parse("gf:"), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK_THROWS_AS(Field::prime(4294967311ULL), Error);  // prime, but above 2^32
}

TEST_CASE("primality agrees with a sieve") {
  constexpr std::size_t N = 5000;
  std::vector<bool> composite(N + 1, false);
  composite[0] = composite[1] = true;
  for (std::size_t i = 2; i * i <= N; ++i) {
    if (!composite[i]) {
      for (std::size_t j = i * i; j <= N; j += i) composite[j] = true;
    }
  }
  for (std::size_t i = 0; i <= N; ++i) CHECK(is_prime(i) == !composite[i]);
}

TEST_CASE("scalar parsing and rendering") {
  CHECK(q("6/4").to_string() == "3/2");
  CHECK(q("-6/3").to_string() == "-2");
  CHECK(q("0/5").to_string() == "0");
  CHECK(q("12345678901234567890123").to_string() == "12345678901234567890123");
  const auto p = Field::prime(7);
  CHECK(FieldElement::parse("-1", p).to_string() == "6");
  CHECK(FieldElement::parse("100", p).to_string() == "2");
  for (const char* bad : {"", "1/0", "1.5", "+3", "1/", "/2", "--1", "1 /2", "abc"}) {
    CAPTURE(bad);
    try {
      (void)q(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
    }
  }
  CHECK_THROWS_AS(FieldElement::parse("1/2", p), Error);
}

TEST_CASE("render then parse round-trips") {
  SeededRng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = FieldElement::from_rational(
        mpq_class(static_cast<long>(rng.between(-1000, 1000)), static_cast<long>(rng.between(1, 1000))), Q);
    CHECK(q(a.to_string().c_str()) == a);
  }
}

TEST_CASE("errors") {
  const auto p = Field::prime(7);
  try {
    (void)(from_integer(1, Q) + from_integer(1, p));
    FAIL("mixed fields accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedField);
  }
  try {
    (void)inv(from_integer(0, Q));
    FAIL("zero inverted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  CHECK_THROWS_AS((void)inv(from_integer(14, p)), Error);
  CHECK_FALSE(from_integer(1, Q) == from_integer(1, p));
}

TEST_CASE("rational arithmetic against hand fractions") {
  SeededRng rng(3);
  for (int t = 0; t < 300; ++t) {
    const long a = rng.between(-50, 50), b = rng.between(1, 50);
    const long c = rng.between(-50, 50), d = rng.between(1, 50);
    const auto x = FieldElement::from_rational(mpq_class(a, b), Q);
    const auto y = FieldElement::from_rational(mpq_class(c, d), Q);
    auto reduced = [](long num, long den) {
      const long g = std::gcd(num, den);
      return FieldElement::parse(std::to_string(num / g) + "/" + std::to_string(den / g), Q);
    };
    CHECK(x + y == reduced(a * d + c * b, b * d));
    CHECK(x * y == reduced(a * c, b * d));
    if (c != 0) {
      const long num = a * d, den = b * c;
      CHECK(x / y == reduced(den < 0 ? -num : num, den < 0 ? -den : den));
    }
  }
}

TEST_CASE("prime field arithmetic against plain modular arithmetic") {
  for (std::uint64_t p : {2ULL, 3ULL, 10007ULL, 4294967291ULL}) {
    const auto F = Field::prime(p);
    SeededRng rng(p);
    for (int t = 0; t < 200; ++t) {
      const auto a = rng.below(p), b = rng.below(p);
      const auto x = from_integer(static_cast<long long>(a), F);
      const auto y = from_integer(static_cast<long long>(b), F);
      CHECK((x + y).as_residue() == (a + b) % p);
      CHECK((x - y).as_residue() == (a + p - b) % p);
      CHECK((x * y).as_residue() == static_cast<std::uint64_t>((unsigned __int128)a * b % p));
      if (a != 0) CHECK(inv(x).as_residue() == mod_pow(a, p - 2, p));
      CHECK(x.pow(5).as_residue() == mod_pow(a, 5, p));
    }
  }
}

TEST_CASE("field axioms on random elements") {
  for (const auto F : {Q, Field::prime(10007), Field::prime(5)}) {
    SeededRng rng(21);
    const auto zero = FieldElement::zero(F), one = FieldElement::one(F);
    for (int t = 0; t < 200; ++t) {
      const auto a = random_scalar(F, rng), b = random_scalar(F, rng), c = random_scalar(F, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a + (-a) == zero);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == one);
        CHECK(a.pow(-2) * a.pow(2) == one);
      }
    }
  }
}
