// SPDX-License-Identifier: Apache-2.0
#include "symtrace/random.hpp"

#include <limits>

namespace symtrace {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorKind::InvalidArgument, "empty range");
  // Rejection keeps the draw unbiased.
  const auto limit = std::numeric_limits<std::uint64_t>::max() -
                     std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

long long SeededRng::between(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

FieldElement random_scalar(Field field, SeededRng& rng) {
  if (field.is_rational()) return FieldElement::from_integer(rng.between(-9, 9), field);
  return FieldElement::from_integer(static_cast<long long>(rng.below(field.modulus())), field);
}

Matrix random_matrix(std::size_t n, Field field, SeededRng& rng) {
  auto a = Matrix::zero(n, FieldElement::zero(field));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_scalar(field, rng);
  }
  return a;
}

Matrix random_invertible_matrix(std::size_t n, Field field, SeededRng& rng) {
  while (true) {
    auto a = random_matrix(n, field, rng);
    if (!determinant(a).is_zero()) return a;
  }
}

Matrix random_unimodular_matrix(std::size_t n, Field field, SeededRng& rng) {
  auto lower = Matrix::identity(n, FieldElement::zero(field));
  auto upper = lower;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = random_scalar(field, rng);
      upper(j, i) = random_scalar(field, rng);
    }
  }
  return lower * upper;
}

}  // namespace symtrace
