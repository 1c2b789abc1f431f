// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symtrace/matrix.hpp"

namespace symtrace {

/// A linear functional sigma_1(A) = sum_{i,j} c_{ij} a_{ij} that vanishes on
/// the identity matrix (sum_i c_{ii} = 0, checked at construction).
class LinearFunctional {
 public:
  /// Throws InvalidArgument when the coefficients do not vanish on the identity.
  LinearFunctional(Matrix coefficients, std::string label = {});

  /// The functional picking entry a_{ij} (1-based, i != j). Labelled "aIJ".
  static LinearFunctional entry(std::size_t n, std::size_t i, std::size_t j, Field field);
  /// a_{ii} - a_{jj} (1-based, i != j). Labelled "aII-aJJ".
  static LinearFunctional diagonal_difference(std::size_t n, std::size_t i, std::size_t j,
                                              Field field);
  /// Accepts "aIJ"/"EIJ" for entries and "aII-aJJ"/"DIJ" for diagonal
  /// differences; throws UnknownLabel otherwise.
  static LinearFunctional from_label(std::string_view label, std::size_t n, Field field);

  std::size_t dimension() const noexcept { return coefficients_.dimension(); }
  Field field() const { return coefficients_.like().field(); }
  const Matrix& coefficients() const noexcept { return coefficients_; }
  const std::string& label() const noexcept { return label_; }

  FieldElement operator()(const Matrix& a) const;

  /// alpha * f + beta * g, unlabelled.
  friend LinearFunctional combine(const FieldElement& alpha, const LinearFunctional& f,
                                  const FieldElement& beta, const LinearFunctional& g);

 private:
  Matrix coefficients_;
  std::string label_;
};

/// The n^2 - 1 basis functionals in table order: entries above the diagonal
/// row by row (a12, a13, ..., a1n, a23, ...), entries below the diagonal
/// column by column (a21, a31, ..., an1, a32, ...), then a11-a22 ... a11-ann.
std::vector<LinearFunctional> canonical_functionals(std::size_t n, Field field);

/// Signals A = lambda I, where every identity-vanishing functional is zero.
struct ScalarMatrixCase {
  FieldElement lambda;
};

using FunctionalChoice = std::variant<LinearFunctional, ScalarMatrixCase>;

/// Scans all a_{ij} (i != j) row-major, then a11-a22 ... a11-ann, and returns
/// the first functional not vanishing on A.
FunctionalChoice auto_functional(const Matrix& a);

}  // namespace symtrace
