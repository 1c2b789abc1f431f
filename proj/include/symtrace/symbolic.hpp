// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symtrace/functional.hpp"
#include "symtrace/matrix.hpp"
#include "symtrace/multipoly.hpp"

namespace symtrace {

using PolyMatrix = SquareMatrix<MultiPoly>;

/// Index of the indeterminate a_{ij} (1-based i, j) among the n^2 variables.
inline std::size_t entry_variable(std::size_t n, std::size_t i, std::size_t j) {
  return (i - 1) * n + (j - 1);
}

/// The n x n matrix whose (i, j) entry is the indeterminate a_{ij}.
PolyMatrix generic_matrix(std::size_t n);

/// Renders with indeterminates written aIJ (n <= 9) or a[I,J], terms in
/// graded-lexicographic order, e.g. "a12*a33 - a13*a32" or "1/2*a11^2 + 3".
std::string render_polynomial(const MultiPoly& p, std::size_t n);

/// Inverse of render_polynomial; also accepts any term order, repeated
/// factors, and coefficients anywhere in a product. Throws Parse.
MultiPoly parse_polynomial(std::string_view text, std::size_t n);

/// sigma_2 ... sigma_{n-1} as polynomials in the a_{ij}, for the functional
/// named by `label` (see LinearFunctional::from_label). Throws UnknownLabel.
std::vector<MultiPoly> symbolic_sigma(std::size_t n, std::string_view label);

/// One transcribed table row.
struct FixtureRow {
  std::string label;
  MultiPoly sigma2;
  std::optional<MultiPoly> sigma3;
};

struct TableFixture {
  std::size_t n = 0;
  std::vector<FixtureRow> rows;
};

/// Reads the plain-text table format:
///
///   # comment
///   label ; sigma2 ; sigma3
///
/// n = 3 rows carry two fields, n = 4 rows three. Throws Parse.
TableFixture parse_fixture(std::string_view text, std::size_t n);

/// The built-in fixture for n = 3 or n = 4.
TableFixture builtin_fixture(std::size_t n);
std::string_view builtin_fixture_text(std::size_t n);

struct TableRowResult {
  std::string label;
  bool match = false;
  /// computed - expected for each sigma_i (i = 2..), rendered; "0" on match.
  std::vector<std::string> differences;
};

struct TableReport {
  std::size_t n = 0;
  std::vector<TableRowResult> rows;

  std::size_t matched() const noexcept;
  bool all_match() const noexcept { return matched() == rows.size(); }
  /// One line per row followed by "k/m match".
  std::string to_text() const;
};

TableReport verify_tables(const TableFixture& fixture);
TableReport verify_tables(std::size_t n);

}  // namespace symtrace
