// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "symtrace/matrix.hpp"

namespace symtrace {

/// Seeded generator with a portable bounded draw, so that a seed reproduces
/// the same matrices with any standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi);

 private:
  std::mt19937_64 engine_;
};

/// Rationals: integer entries uniform in [-9, 9]. Prime fields: uniform residues.
Matrix random_matrix(std::size_t n, Field field, SeededRng& rng);
FieldElement random_scalar(Field field, SeededRng& rng);

/// Redraws until the determinant is nonzero.
Matrix random_invertible_matrix(std::size_t n, Field field, SeededRng& rng);

/// L U with unit-diagonal triangular factors, so det = 1; the conjugators used
/// in invariance tests.
Matrix random_unimodular_matrix(std::size_t n, Field field, SeededRng& rng);

}  // namespace symtrace
