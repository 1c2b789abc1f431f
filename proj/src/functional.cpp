// SPDX-License-Identifier: Apache-2.0
#include "symtrace/functional.hpp"

#include <algorithm>

namespace symtrace {

namespace {

std::string entry_label(std::size_t i, std::size_t j) {
  return "a" + std::to_string(i) + std::to_string(j);
}

std::optional<std::size_t> digit(char c) {
  if (c >= '1' && c <= '9') return static_cast<std::size_t>(c - '0');
  return std::nullopt;
}

[[noreturn]] void unknown(std::string_view label, std::size_t n) {
  fail(ErrorKind::UnknownLabel,
       "unknown functional \"" + std::string(label) + "\" for n = " + std::to_string(n));
}

}  // namespace

LinearFunctional::LinearFunctional(Matrix coefficients, std::string label)
    : coefficients_(std::move(coefficients)), label_(std::move(label)) {
  if (!trace(coefficients_).is_zero()) {
    fail(ErrorKind::InvalidArgument, "functional does not vanish on the identity");
  }
}

LinearFunctional LinearFunctional::entry(std::size_t n, std::size_t i, std::size_t j,
                                         Field field) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    fail(ErrorKind::InvalidArgument, "entry functional needs distinct indices in 1..n");
  }
  auto c = Matrix::zero(n, FieldElement::zero(field));
  c(i - 1, j - 1) = FieldElement::one(field);
  return LinearFunctional(std::move(c), entry_label(i, j));
}

LinearFunctional LinearFunctional::diagonal_difference(std::size_t n, std::size_t i,
                                                       std::size_t j, Field field) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    fail(ErrorKind::InvalidArgument, "diagonal difference needs distinct indices in 1..n");
  }
  auto c = Matrix::zero(n, FieldElement::zero(field));
  c(i - 1, i - 1) = FieldElement::one(field);
  c(j - 1, j - 1) = -FieldElement::one(field);
  return LinearFunctional(std::move(c), entry_label(i, i) + "-" + entry_label(j, j));
}

LinearFunctional LinearFunctional::from_label(std::string_view label, std::size_t n,
                                              Field field) {
  std::string s;
  std::copy_if(label.begin(), label.end(), std::back_inserter(s),
               [](char c) { return c != ' '; });
  auto in_range = [n](std::optional<std::size_t> d) { return d && *d <= n; };

  if (s.size() == 3 && (s[0] == 'a' || s[0] == 'E')) {
    const auto i = digit(s[1]), j = digit(s[2]);
    if (in_range(i) && in_range(j) && *i != *j) return entry(n, *i, *j, field);
  } else if (s.size() == 3 && s[0] == 'D') {
    const auto i = digit(s[1]), j = digit(s[2]);
    if (in_range(i) && in_range(j) && *i != *j) return diagonal_difference(n, *i, *j, field);
  } else if (s.size() == 7 && s[0] == 'a' && s[3] == '-' && s[4] == 'a' && s[1] == s[2] &&
             s[5] == s[6]) {
    const auto i = digit(s[1]), j = digit(s[5]);
    if (in_range(i) && in_range(j) && *i != *j) return diagonal_difference(n, *i, *j, field);
  }
  unknown(label, n);
}

FieldElement LinearFunctional::operator()(const Matrix& a) const {
  if (a.dimension() != dimension()) {
    fail(ErrorKind::DimensionMismatch, "functional of dimension " + std::to_string(dimension()) +
                                           " applied to a " + std::to_string(a.dimension()) +
                                           "x" + std::to_string(a.dimension()) + " matrix");
  }
  auto sum = FieldElement::zero(field());
  const auto c = coefficients_.entries();
  const auto x = a.entries();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) sum += c[i] * x[i];
  }
  return sum;
}

LinearFunctional combine(const FieldElement& alpha, const LinearFunctional& f,
                         const FieldElement& beta, const LinearFunctional& g) {
  return LinearFunctional(f.coefficients() * alpha + g.coefficients() * beta);
}

std::vector<LinearFunctional> canonical_functionals(std::size_t n, Field field) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "functionals need n >= 2");
  std::vector<LinearFunctional> out;
  out.reserve(n * n - 1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) out.push_back(LinearFunctional::entry(n, i, j, field));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = j + 1; i <= n; ++i) out.push_back(LinearFunctional::entry(n, i, j, field));
  }
  for (std::size_t j = 2; j <= n; ++j) {
    out.push_back(LinearFunctional::diagonal_difference(n, 1, j, field));
  }
  return out;
}

FunctionalChoice auto_functional(const Matrix& a) {
  const auto n = a.dimension();
  const auto field = a.like().field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !a(i, j).is_zero()) return LinearFunctional::entry(n, i + 1, j + 1, field);
    }
  }
  for (std::size_t j = 1; j < n; ++j) {
    if (a(0, 0) != a(j, j)) return LinearFunctional::diagonal_difference(n, 1, j + 1, field);
  }
  return ScalarMatrixCase{a(0, 0)};
}

}  // namespace symtrace
