// SPDX-License-Identifier: Apache-2.0
#include <gmpxx.h>

#include "symtrace/symcore.hpp"

namespace symtrace {

namespace {

void require_dimension(const Matrix& a, const LinearFunctional& f, std::size_t n) {
  if (a.dimension() != n || f.dimension() != n) {
    fail(ErrorKind::DimensionMismatch, "closed form needs n = " + std::to_string(n));
  }
}

FieldElement binomial(long long top, long long bottom, Field field) {
  if (top < 0 || bottom < 0 || bottom > top) return FieldElement::zero(field);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return FieldElement::from_integer(c, field);
}

long long floor_half(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// Shared prelude: sigma values and their ratios to sigma_1.
struct Ratios {
  SigmaVector sigma;
  FieldElement s1_inv;
};

Ratios prepare(TraceEngine& engine, const LinearFunctional& f) {
  auto sigma = engine.sigma(f);
  if (sigma(1).is_zero()) {
    fail(ErrorKind::FunctionalVanishes, "functional " + f.label() + " vanishes on the matrix");
  }
  auto inv = sigma(1).inverse();
  return {std::move(sigma), std::move(inv)};
}

}  // namespace

FieldElement closed_form_n2(const Matrix& a, std::size_t k) {
  if (a.dimension() != 2) fail(ErrorKind::DimensionMismatch, "closed form needs n = 2");
  return closed_form_n2(a, LinearFunctional::entry(2, 1, 2, a.like().field()), k);
}

FieldElement closed_form_n2(const Matrix& a, const LinearFunctional& f, std::size_t k) {
  require_dimension(a, f, 2);
  TraceEngine engine(a);
  const auto s1 = f(a);
  if (s1.is_zero()) {
    fail(ErrorKind::FunctionalVanishes, "functional " + f.label() + " vanishes on the matrix");
  }
  return f(engine.power(k + 1)) / s1;
}

bool closed_form_n3_valid(std::size_t k) noexcept { return k >= kClosedFormN3MinDegree; }

bool closed_form_n4_valid(std::size_t k) noexcept {
  return k >= kClosedFormN4MinDegree && k % 2 == 1;
}

FieldElement evaluate_n3_expression(const Matrix& a, const LinearFunctional& f, std::size_t k) {
  require_dimension(a, f, 3);
  TraceEngine engine(a);
  const auto [sigma, s1_inv] = prepare(engine, f);
  const auto r = sigma(2) * s1_inv;
  const auto kk = static_cast<long long>(k);

  auto sum = zero_like(r);
  auto r_pow = one_like(r);
  for (long long i = 0; i <= kk - 2; ++i) {
    sum += r_pow * f(engine.power(static_cast<std::size_t>(kk + 1 - i)));
    r_pow *= r;
  }
  const auto tail = (f(engine.power(2)) + sigma(2)) * s1_inv;
  return sum * s1_inv + r.pow(kk - 1) * tail;
}

FieldElement closed_form_n3(const Matrix& a, const LinearFunctional& f, std::size_t k) {
  if (!closed_form_n3_valid(k)) {
    fail(ErrorKind::OutOfValidatedRange,
         "n = 3 closed form is validated for k >= " + std::to_string(kClosedFormN3MinDegree));
  }
  return evaluate_n3_expression(a, f, k);
}

FieldElement evaluate_n4_expression(const Matrix& a, const LinearFunctional& f, std::size_t k) {
  require_dimension(a, f, 4);
  TraceEngine engine(a);
  const auto [sigma, s1_inv] = prepare(engine, f);
  const auto field = a.like().field();
  const auto r = sigma(2) * s1_inv;
  const auto t = sigma(3) * s1_inv;
  const auto kk = static_cast<long long>(k);
  const auto upper = floor_half(kk - 3);

  auto first = zero_like(r);
  for (long long j = 0; j <= upper; ++j) {
    auto inner = zero_like(r);
    for (long long i = 0; i <= kk - (2 * j + 3); ++i) {
      inner += binomial(i + j, j, field) * r.pow(i) *
               f(engine.power(static_cast<std::size_t>(kk + 1 - i - 2 * j)));
    }
    const auto term = t.pow(j) * inner;
    if (j % 2 == 0) {
      first += term;
    } else {
      first -= term;
    }
  }
  first *= s1_inv;

  const auto h1 = (f(engine.power(2)) + sigma(2)) * s1_inv;
  const auto h2 = (f(engine.power(3)) - sigma(3)) * s1_inv + r * h1;

  auto second = zero_like(r);
  auto third = zero_like(r);
  for (long long j = 0; j <= upper; ++j) {
    auto s = binomial(kk - 2 - j, j, field) * t.pow(j) * r.pow(kk - 2 - 2 * j);
    auto u = binomial(kk - 3 - j, j, field) * t.pow(j) * r.pow(kk - 3 - 2 * j);
    if (j % 2 == 0) {
      second += s;
      third += u;
    } else {
      second -= s;
      third -= u;
    }
  }
  return first + h2 * second - h1 * t * third;
}

FieldElement closed_form_n4(const Matrix& a, const LinearFunctional& f, std::size_t k) {
  if (!closed_form_n4_valid(k)) {
    fail(ErrorKind::OutOfValidatedRange,
         "n = 4 closed form is validated for odd k >= " + std::to_string(kClosedFormN4MinDegree));
  }
  return evaluate_n4_expression(a, f, k);
}

}  // namespace symtrace
