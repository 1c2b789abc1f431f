// SPDX-License-Identifier: Apache-2.0
#include "symtrace/matrix.hpp"

namespace symtrace {

void check_dimension(const FieldElement& like, std::size_t n) {
  const auto p = like.field().characteristic();
  if (p != 0 && p <= n) {
    fail(ErrorKind::CharacteristicTooSmall,
         "field " + like.field().to_string() + " needs p > n = " + std::to_string(n));
  }
}

Matrix matrix_from_integers(const std::vector<std::vector<long long>>& rows, Field field) {
  std::vector<std::vector<FieldElement>> converted;
  converted.reserve(rows.size());
  for (const auto& row : rows) {
    auto& out = converted.emplace_back();
    out.reserve(row.size());
    for (long long v : row) out.push_back(FieldElement::from_integer(v, field));
  }
  return Matrix::from_rows(converted);
}

FieldElement determinant(const Matrix& a) { return exterior_traces(a).determinant(); }

Matrix inverse(const Matrix& a) {
  auto data = characteristic_data(a);
  const auto& det = data.exterior.determinant();
  if (det.is_zero()) fail(ErrorKind::SingularMatrix, "matrix is singular");
  return data.adjugate * det.inverse();
}

}  // namespace symtrace
