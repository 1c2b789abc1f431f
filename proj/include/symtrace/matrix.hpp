// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symtrace/error.hpp"
#include "symtrace/field.hpp"

namespace symtrace {

/// Dense n x n matrix over a commutative ring type T.
///
/// T supplies the usual arithmetic operators plus the free functions
/// zero_like, one_like, integer_like, divide_by_integer and is_zero, and a
/// check_dimension hook that rejects dimensions the coefficient ring cannot
/// support (a prime field needs p > n). Storage is row-major and indices
/// are 0-based; a_{ij} in the documentation is entry (i-1, j-1).
template <class T>
class SquareMatrix {
 public:
  SquareMatrix(std::size_t n, const T& fill) : n_(n), entries_(n * n, fill) {
    if (n == 0) fail(ErrorKind::InvalidArgument, "matrix dimension must be positive");
    check_dimension(fill, n);
  }

  static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    const auto n = rows.size();
    if (n == 0) fail(ErrorKind::InvalidArgument, "matrix dimension must be positive");
    for (const auto& row : rows) {
      if (row.size() != n) {
        fail(ErrorKind::DimensionMismatch, "matrix rows must have length " + std::to_string(n));
      }
    }
    SquareMatrix m(n, rows[0][0]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static SquareMatrix zero(std::size_t n, const T& like) { return SquareMatrix(n, zero_like(like)); }

  static SquareMatrix identity(std::size_t n, const T& like) {
    SquareMatrix m = zero(n, like);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(like);
    return m;
  }

  std::size_t dimension() const noexcept { return n_; }

  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  std::span<const T> entries() const noexcept { return entries_; }

  /// Any entry, used as the prototype for zero_like and friends.
  const T& like() const noexcept { return entries_.front(); }

  SquareMatrix& operator+=(const SquareMatrix& other) {
    require_same_dimension(other);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
  }

  SquareMatrix& operator-=(const SquareMatrix& other) {
    require_same_dimension(other);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
  }

  SquareMatrix& operator*=(const T& scalar) {
    for (auto& x : entries_) x *= scalar;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const T& s) { return a *= s; }
  friend SquareMatrix operator*(const T& s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.require_same_dimension(b);
    const auto n = a.n_;
    SquareMatrix c = zero(n, a.like());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  bool is_zero_matrix() const {
    for (const auto& x : entries_) {
      if (!is_zero(x)) return false;
    }
    return true;
  }

 private:
  void require_same_dimension(const SquareMatrix& other) const {
    if (n_ != other.n_) {
      fail(ErrorKind::DimensionMismatch,
           "dimensions " + std::to_string(n_) + " and " + std::to_string(other.n_));
    }
  }

  std::size_t n_;
  std::vector<T> entries_;
};

/// Rejects matrix dimensions whose Faddeev-LeVerrier divisions 1..n are not
/// invertible in the element's field.
void check_dimension(const FieldElement& like, std::size_t n);

using Matrix = SquareMatrix<FieldElement>;

/// Builds a matrix over `field` from small integer rows.
Matrix matrix_from_integers(const std::vector<std::vector<long long>>& rows, Field field);

template <class T>
SquareMatrix<T> mat_mul(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  return a * b;
}

/// A^0 ... A^m by repeated multiplication.
template <class T>
std::vector<SquareMatrix<T>> power_sequence(const SquareMatrix<T>& a, std::size_t m) {
  std::vector<SquareMatrix<T>> powers;
  powers.reserve(m + 1);
  powers.push_back(SquareMatrix<T>::identity(a.dimension(), a.like()));
  for (std::size_t i = 1; i <= m; ++i) powers.push_back(powers.back() * a);
  return powers;
}

template <class T>
T trace(const SquareMatrix<T>& a) {
  T sum = zero_like(a.like());
  for (std::size_t i = 0; i < a.dimension(); ++i) sum += a(i, i);
  return sum;
}

/// tr(Λ^j A) for j = 0..n; larger j are implicitly zero.
template <class T>
class ExteriorTraces {
 public:
  explicit ExteriorTraces(std::vector<T> values) : values_(std::move(values)) {}

  /// Matrix dimension n; the sequence holds n + 1 values.
  std::size_t dimension() const noexcept { return values_.size() - 1; }
  const T& operator[](std::size_t j) const { return values_.at(j); }
  std::span<const T> values() const noexcept { return values_; }
  const T& determinant() const { return values_.back(); }

 private:
  std::vector<T> values_;
};

/// Characteristic-polynomial data from one Faddeev-LeVerrier sweep.
template <class T>
struct CharacteristicData {
  ExteriorTraces<T> exterior;
  /// adj(A), recovered from the last iterate of the sweep.
  SquareMatrix<T> adjugate;
};

/// Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
/// The exterior traces are e_k = (-1)^k c_{n-k}, and A M_n = -c_0 I gives the
/// adjugate as (-1)^(n+1) M_n.
template <class T>
CharacteristicData<T> characteristic_data(const SquareMatrix<T>& a) {
  const auto n = a.dimension();
  const T& like = a.like();
  check_dimension(like, n);
  const auto identity = SquareMatrix<T>::identity(n, like);

  std::vector<T> e;
  e.reserve(n + 1);
  e.push_back(one_like(like));
  SquareMatrix<T> m = identity;
  for (std::size_t k = 1; k <= n; ++k) {
    SquareMatrix<T> am = a * m;
    // c_{n-k} = -tr(AM)/k, and e_k = (-1)^k c_{n-k}.
    T c = -divide_by_integer(trace(am), static_cast<long long>(k));
    e.push_back(k % 2 == 0 ? c : -c);
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c;
    m = std::move(am);
  }
  if (n % 2 == 0) m *= integer_like(like, -1);
  return {ExteriorTraces<T>(std::move(e)), std::move(m)};
}

template <class T>
ExteriorTraces<T> exterior_traces(const SquareMatrix<T>& a) {
  return characteristic_data(a).exterior;
}

/// sum_{i=0}^{n} (-1)^i e_i A^{n-i+p}; the zero matrix by Cayley-Hamilton.
template <class T>
SquareMatrix<T> cayley_hamilton_residual(const SquareMatrix<T>& a, std::size_t p) {
  const auto n = a.dimension();
  const auto e = exterior_traces(a);
  const auto powers = power_sequence(a, n + p);
  auto residual = SquareMatrix<T>::zero(n, a.like());
  for (std::size_t i = 0; i <= n; ++i) {
    auto term = powers[n - i + p] * e[i];
    if (i % 2 == 0) {
      residual += term;
    } else {
      residual -= term;
    }
  }
  return residual;
}

FieldElement determinant(const Matrix& a);

/// A^{-1} = adj(A) / det(A); throws SingularMatrix when det(A) = 0.
Matrix inverse(const Matrix& a);

}  // namespace symtrace
