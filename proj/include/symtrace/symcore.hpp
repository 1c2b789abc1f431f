// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "symtrace/functional.hpp"
#include "symtrace/matrix.hpp"

namespace symtrace {

// ---------------------------------------------------------------------------
// Ring-generic recursions, shared by the numeric and the symbolic paths.

/// h_0 = 1 and h_m = sum_{j=1}^{min(m,n)} (-1)^{j+1} e_j h_{m-j}, the trace
/// identity sum_j (-1)^j tr(Sym^{m-j} A) tr(Λ^j A) = 0 solved for its top term.
template <class T>
std::vector<T> sym_trace_values(const ExteriorTraces<T>& e, std::size_t max_degree) {
  const auto n = e.dimension();
  std::vector<T> h;
  h.reserve(max_degree + 1);
  h.push_back(one_like(e[0]));
  for (std::size_t m = 1; m <= max_degree; ++m) {
    T acc = zero_like(e[0]);
    for (std::size_t j = 1; j <= std::min(m, n); ++j) {
      if (j % 2 == 1) {
        acc += e[j] * h[m - j];
      } else {
        acc -= e[j] * h[m - j];
      }
    }
    h.push_back(std::move(acc));
  }
  return h;
}

/// Solves the defining identities
///   sigma_1(A^i) = sum_{m=1}^{i} (-1)^{m-1} sigma_m(A) tr(Sym^{i-m} A),  i = 2..n-1,
/// for their last term. `functional_powers[i-1]` holds sigma_1(A^i) for
/// i = 1..n-1 and `sym` holds tr(Sym^j A) for j = 0..n-2 at least.
template <class T>
std::vector<T> solve_sigmas(std::span<const T> functional_powers, std::span<const T> sym) {
  std::vector<T> sigma;
  if (functional_powers.empty()) return sigma;
  sigma.reserve(functional_powers.size());
  sigma.push_back(functional_powers[0]);
  for (std::size_t i = 2; i <= functional_powers.size(); ++i) {
    T acc = functional_powers[i - 1];
    for (std::size_t m = 1; m < i; ++m) {
      if (m % 2 == 1) {
        acc -= sigma[m - 1] * sym[i - m];
      } else {
        acc += sigma[m - 1] * sym[i - m];
      }
    }
    sigma.push_back(i % 2 == 0 ? -acc : acc);
  }
  return sigma;
}

// ---------------------------------------------------------------------------
// Numeric types.

/// sigma_1(A) ... sigma_{n-1}(A) for one (matrix, functional) pair.
class SigmaVector {
 public:
  explicit SigmaVector(std::vector<FieldElement> values) : values_(std::move(values)) {}

  /// n - 1.
  std::size_t size() const noexcept { return values_.size(); }
  /// 1-based: sigma(1) is the functional evaluated on A.
  const FieldElement& operator()(std::size_t i) const { return values_.at(i - 1); }
  std::span<const FieldElement> values() const noexcept { return values_; }

 private:
  std::vector<FieldElement> values_;
};

enum class SymTraceMethod { Recurrence, Theorem, Oracle };

std::string_view to_string(SymTraceMethod method) noexcept;

/// h[k] = tr(Sym^k A) for k = 0..K, tagged with the route that produced it.
class SymTraceSequence {
 public:
  SymTraceSequence(std::vector<FieldElement> values, SymTraceMethod method)
      : values_(std::move(values)), method_(method) {}

  std::size_t max_degree() const noexcept { return values_.size() - 1; }
  SymTraceMethod method() const noexcept { return method_; }
  std::span<const FieldElement> values() const noexcept { return values_; }

  /// Negative degrees are zero. Throws InvalidArgument past max_degree().
  FieldElement operator[](long long k) const;

 private:
  std::vector<FieldElement> values_;
  SymTraceMethod method_;
};

// ---------------------------------------------------------------------------
// Cached per-matrix state.

/// Caches the power sequence, exterior traces and recurrence traces of one
/// matrix so that many (functional, k) queries share the work. Not safe for
/// concurrent use; the free functions below each build their own engine.
class TraceEngine {
 public:
  explicit TraceEngine(Matrix a);

  const Matrix& matrix() const noexcept { return a_; }
  std::size_t dimension() const noexcept { return a_.dimension(); }
  const ExteriorTraces<FieldElement>& exterior() const noexcept { return exterior_; }

  /// A^m, extending the cached sequence on demand.
  const Matrix& power(std::size_t m);
  /// A^{-1}; throws SingularMatrix.
  const Matrix& inverse();
  /// tr(Sym^k A) by the recurrence; zero for negative k.
  FieldElement sym_trace(long long k);
  SymTraceSequence recurrence(std::size_t max_degree);

  SigmaVector sigma(const LinearFunctional& f);
  /// sigma_1(A^m) for any integer m; negative m needs A invertible.
  FieldElement functional_of_power(const LinearFunctional& f, long long m);

  std::pair<FieldElement, FieldElement> theorem_sides(const LinearFunctional& f, long long k);
  SymTraceSequence theorem(const LinearFunctional& f, std::size_t max_degree);

 private:
  TraceEngine(Matrix a, CharacteristicData<FieldElement> data);
  void require_dimension(const LinearFunctional& f) const;

  Matrix a_;
  ExteriorTraces<FieldElement> exterior_;
  Matrix adjugate_;
  std::vector<Matrix> powers_;
  std::vector<FieldElement> sym_;
  std::optional<Matrix> inverse_;
};

// ---------------------------------------------------------------------------
// Operations.

SigmaVector sigma_values(const Matrix& a, const LinearFunctional& f);

SymTraceSequence sym_traces_recurrence(const Matrix& a, std::size_t max_degree);

/// (sigma_1(A^{k+1}), sum_{i=1}^{n-1} (-1)^{i-1} sigma_i(A) tr(Sym^{k-i+1} A)).
/// For k <= -1 the matrix must be invertible (SingularMatrix otherwise).
std::pair<FieldElement, FieldElement> theorem_lhs_rhs(const Matrix& a, const LinearFunctional& f,
                                                      long long k);

/// h[k] = (sigma_1(A^{k+1}) + sum_{i=2}^{n-1} (-1)^i sigma_i(A) h[k-i+1]) / sigma_1(A).
/// Throws FunctionalVanishes when f(A) = 0.
SymTraceSequence sym_traces_theorem(const Matrix& a, const LinearFunctional& f,
                                    std::size_t max_degree);

/// C(n+k-1, k) lambda^k, the value on lambda I.
FieldElement sym_trace_scalar(const FieldElement& lambda, std::size_t n, std::size_t k);

/// sum_{j=0}^{n} (-1)^j tr(Sym^{n+p-j} A) e_j using the given trace sequence
/// (which must reach degree n + p).
FieldElement ktheory_residual(const Matrix& a, std::size_t p, const SymTraceSequence& sym);
/// Same, with the traces taken from the recurrence.
FieldElement ktheory_residual(const Matrix& a, std::size_t p);

// ---------------------------------------------------------------------------
// Induced-matrix oracle.

inline constexpr std::size_t kDefaultOracleCap = 5000;

/// C(n+k-1, k), saturating at SIZE_MAX.
std::size_t induced_dimension(std::size_t n, std::size_t k) noexcept;

/// Sym^k A on the degree-k monomials x^alpha in n variables, ordered
/// graded-lexicographically (x1^k first). Column alpha holds the expansion
/// of prod_j (sum_i a_{ij} x_i)^{alpha_j}.
struct InducedMatrix {
  std::vector<std::vector<unsigned>> basis;
  /// Row-major, basis.size() squared.
  std::vector<FieldElement> entries;

  std::size_t dimension() const noexcept { return basis.size(); }
  const FieldElement& operator()(std::size_t row, std::size_t col) const {
    return entries[row * basis.size() + col];
  }
};

/// Throws OracleTooLarge when C(n+k-1, k) exceeds `cap`.
InducedMatrix induced_matrix(const Matrix& a, std::size_t k, std::size_t cap = kDefaultOracleCap);
FieldElement sym_trace_oracle(const Matrix& a, std::size_t k, std::size_t cap = kDefaultOracleCap);

// ---------------------------------------------------------------------------
// Closed forms for n = 2, 3, 4.

/// sigma_1(A^{k+1}) / sigma_1(A); with the default a12 this is b_{k+1}/b.
FieldElement closed_form_n2(const Matrix& a, std::size_t k);
FieldElement closed_form_n2(const Matrix& a, const LinearFunctional& f, std::size_t k);

/// Smallest k for which the n = 3 expression is valid.
inline constexpr std::size_t kClosedFormN3MinDegree = 1;
/// The n = 4 expression is valid for odd k >= 3 only; see closed_form_n4.
inline constexpr std::size_t kClosedFormN4MinDegree = 3;

bool closed_form_n3_valid(std::size_t k) noexcept;
bool closed_form_n4_valid(std::size_t k) noexcept;

/// (1/s1) sum_{i=0}^{k-2} (s2/s1)^i s1(A^{k+1-i}) + (s2/s1)^{k-1} (s1(A^2) + s2)/s1.
/// Throws OutOfValidatedRange for k = 0.
FieldElement closed_form_n3(const Matrix& a, const LinearFunctional& f, std::size_t k);

/// The triple-sum expression with floor((k-3)/2) upper limits. For even k that
/// limit drops the last term of the second sum, so only odd k >= 3 reproduce
/// tr(Sym^k A); other k throw OutOfValidatedRange.
FieldElement closed_form_n4(const Matrix& a, const LinearFunctional& f, std::size_t k);

/// The n = 3 and n = 4 expressions exactly as written, for any k, without the
/// range guard. Used to establish and regression-test the validated ranges.
FieldElement evaluate_n3_expression(const Matrix& a, const LinearFunctional& f, std::size_t k);
FieldElement evaluate_n4_expression(const Matrix& a, const LinearFunctional& f, std::size_t k);

}  // namespace symtrace
